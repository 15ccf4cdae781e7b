/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <vector>

#include "tvx/automorphism.hpp"

namespace tvx {

/// True if u comes strictly before w when sweeping clockwise from the start
/// direction `start`. Exact integer arithmetic.
bool clockwise_before(LatticeVec start, LatticeVec u, LatticeVec w);

/// A generic start direction in the open third quadrant that is not parallel
/// to any of `dirs`.
LatticeVec generic_start(const std::vector<LatticeVec>& dirs);

/// Wall through the origin: a full line R γ or a ray R_{>=0} γ.
struct CentralWall {
    WallLog log;
    bool line = false;
    LatticeVec gamma() const { return log.gamma(); }
};

/// Diagram all of whose walls pass through the origin (a standard diagram or
/// an asymptotic diagram).
struct CentralDiagram {
    ContextPtr ctx;
    std::vector<CentralWall> walls;

    std::vector<const CentralWall*> rays() const;
};

/// Crossing of the clockwise loop around the origin: wall index and sign.
struct CentralCrossing {
    int wall;
    int sign;
    LatticeVec half;  // direction of the crossed half line
};

std::vector<CentralCrossing> loop_crossings(const CentralDiagram& d);

/// θ_π(z) for the clockwise loop around the origin starting in the third
/// quadrant: θ_π = θ_1^{ε_1} ∘ ... ∘ θ_s^{ε_s} in crossing order.
template <class C>
Series<C> loop_apply(const CentralDiagram& d, const Series<C>& z);

GeneratorImages loop_product(const CentralDiagram& d);

/// Same loop computed through WallOperator spectra instead of Hamiltonians:
/// each crossed wall acts on the images of ê_x, ê_y by its finite q-shifted
/// products. Every wall must be given as an operator.
GeneratorImages loop_product(ContextPtr ctx, const std::vector<std::pair<WallOperator, bool>>& walls);

/// Standard line R α with operator θ̂^ell[t_var ê_α].
CentralWall standard_line(ContextPtr ctx, LatticeVec alpha, int var, const Rat& ell);

/// Order-by-order saturation of a diagram of lines through the origin: for each
/// total degree D the defect of the loop product at degree D is cancelled by
/// adding degree-D terms to rays in the positive quadrant.
CentralDiagram saturate_central(const CentralDiagram& lines);

}  // namespace tvx
