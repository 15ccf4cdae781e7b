/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <map>
#include <utility>

#include "tvx/wall.hpp"

namespace tvx {

/// Ω_n(kγ) for one direction, stored through the Laurent polynomials
/// P(kγ) = sum_n Ω_n v^n (equivalently sum_n (-1)^n Ω_n (-v)^n), one per
/// (k, σ) pair.
struct OmegaSpectrum {
    LatticeVec gamma;
    std::map<std::pair<int, Multidegree>, QLaurent> poincare;

    Rat omega(int k, int n, const Multidegree& sigma) const;
    WallOperator to_operator() const;
    bool operator==(const OmegaSpectrum&) const = default;
};

/// Inverts wall_operator_log: solves
///   L_{m,D} = sum_{j | m, j | D} ((-1)^{j+1}/j) [m/j]_{v^j} P_{m/j,D/j}|_{v^n -> (-1)^{n(j+1)} v^{jn}}
/// for the P's by induction on m. Throws std::domain_error if some P is not a
/// Laurent polynomial.
OmegaSpectrum extract_omegas(const WallLog& h);

OmegaSpectrum spectrum_of(const WallOperator& op);

}  // namespace tvx
