/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>
#include <vector>

#include "tvx/series.hpp"

namespace tvx {

/// Element of the commutative (q = 1) algebra: sum of c * t^d * e_lat.
using ClassicalElement = Series<Rat>;

/// Classical wall θ_{γ,f}: e_β ↦ e_β f^{<γ,β>}, stored through log f.
struct ClassicalWall {
    LatticeVec gamma;     // primitive
    ClassicalElement log_f;  // supported on lattice multiples of gamma
    bool line = false;
};

struct ClassicalDiagram {
    ContextPtr ctx;
    std::vector<ClassicalWall> walls;
};

/// log (1 + t_var e_α)^ell.
ClassicalWall classical_line(ContextPtr ctx, LatticeVec alpha, int var, const Rat& ell);

ClassicalElement classical_apply(const ClassicalWall& w, const ClassicalElement& z, int sign = 1);

/// θ_π(z) for the clockwise loop around the origin.
ClassicalElement classical_loop_apply(const ClassicalDiagram& d, const ClassicalElement& z);

/// Order-by-order saturation with commutative products only.
ClassicalDiagram classical_saturate(const ClassicalDiagram& lines);

/// f = exp(log f) of a wall.
ClassicalElement wall_function(const ClassicalWall& w);

/// "1 + t^2*x*y" style rendering (e_(a,b) printed as x^a*y^b).
std::string format_classical(const ClassicalElement& f);

}  // namespace tvx
