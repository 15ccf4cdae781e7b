/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tvx/torus.hpp"

namespace tvx {

/// One factor θ̂^{(-1)^n Ω}[(-v)^n σ ê_{kγ}] of a wall operator.
struct SpectrumEntry {
    int k = 1;
    int n = 0;
    Rat omega;
    Multidegree sigma;  // the monomial σ (for two-variable walls, σ^{kγ})
    bool operator==(const SpectrumEntry&) const = default;
};

/// Product over the spectrum of shifted q-dilogarithm actions in direction γ.
struct WallOperator {
    LatticeVec gamma;
    std::vector<SpectrumEntry> spectrum;

    WallOperator inverse() const;
};

/// Hamiltonian of a wall in direction γ (primitive):
///
///   H = sum_{m,d} L_{m,d} / (v^m - v^{-m}) * t^d * ê_{mγ}
///
/// Storing the "reduced" numerators L keeps everything in Q[v^{±1}]: the
/// action of exp(ad H) on ê_β only ever needs L * (v^{mκ} - v^{-mκ}) /
/// (v^m - v^{-m}), which is a Laurent polynomial, and L at v = 1 is exactly the
/// classical log f coefficient.
class WallLog {
public:
    using Key = std::pair<int, Multidegree>;

    WallLog() = default;
    WallLog(ContextPtr ctx, LatticeVec gamma);

    const ContextPtr& context() const { return ctx_; }
    LatticeVec gamma() const { return gamma_; }
    const std::map<Key, QLaurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int m, const Multidegree& d, const QLaurent& reduced);
    QLaurent reduced(int m, const Multidegree& d) const;
    /// ℓ_m: the actual coefficient of t^d ê_{mγ} in H.
    QRational coefficient(int m, const Multidegree& d) const;

    WallLog& operator+=(const WallLog& o);
    WallLog operator-() const;
    bool operator==(const WallLog& o) const { return gamma_ == o.gamma_ && terms_ == o.terms_; }

    /// H as a torus element with rational-function coefficients.
    TorusElementR hamiltonian() const;
    /// Drops terms not admitted by ctx (same variables).
    WallLog truncated(ContextPtr ctx) const;

private:
    ContextPtr ctx_;
    LatticeVec gamma_;
    std::map<Key, QLaurent> terms_;
};

/// Ω log E((-v)^n σ ê_α) for σ in the maximal ideal.
WallLog qdilog_log(ContextPtr ctx, const Multidegree& sigma, LatticeVec alpha, int n, const Rat& omega);

/// Total logarithm of a wall operator (sum of qdilog_log over the spectrum).
WallLog wall_operator_log(ContextPtr ctx, const WallOperator& op);

/// θ̂(ê_β) evaluated factor by factor from the finite q-shifted products.
TorusElement adjoint_action(ContextPtr ctx, const WallOperator& op, LatticeVec beta);

/// Applies exp(sign * ad H) to every term of x.
template <class C>
Series<C> apply_log(const WallLog& h, const Series<C>& x, int sign = 1);

/// Applies the operator to every term of x via adjoint_action.
TorusElement apply_operator(const WallOperator& op, const TorusElement& x);

}  // namespace tvx
