/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tvx/classical.hpp"
#include "tvx/omega.hpp"
#include "tvx/tropical.hpp"

namespace tvx {

/// Ordered partition: one part per line. Parts are normally positive; the
/// GPS sums also run over zero parts (lines that do not take part).
using OrderedPartition = std::vector<int>;

int partition_size(const OrderedPartition& p);

/// ∏_m (multiplicity of m in w)!
long aut_order(const WeightList& w);

/// Number of ways to assign each index of w to a block (blocks labelled by
/// the parts of P) so that block r has weight sum P_r.
long compatible_set_partitions(const OrderedPartition& p, const WeightList& w);

/// ∏_j (-1)^{w_j - 1} / (w_j [w_j]_q) times the number of compatible set
/// partitions. Throws std::invalid_argument if |P| != |w|.
QRational q_ramification(const OrderedPartition& p, const WeightList& w);
/// Same with 1/w_j^2 (the q = 1 value).
Rat classical_ramification(const OrderedPartition& p, const WeightList& w);

/// Ordered partitions of n into `length` parts (each >= 1, or >= 0).
std::vector<OrderedPartition> ordered_partitions(int n, int length, bool allow_zero);

/// Refined tropical counts for directions (1,0), (0,1), memoized per weight
/// vector. Every count is checked on `configs` configurations.
class TropicalCountCache {
public:
    explicit TropicalCountCache(std::uint64_t seed, int configs = 2) : seed_(seed), configs_(configs) {}
    const QLaurent& refined(const WeightVector& w);
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    int configs_;
    std::map<std::vector<WeightList>, QLaurent> cache_;
};

/// N̂[(P1,P2)] = Σ_w ∏_i R̂(P_i|w_i)/|Aut(w_i)| · N̂^trop(w).
QRational refined_gw(const OrderedPartition& p1, const OrderedPartition& p2, TropicalCountCache& counts);
/// N[(P1,P2)] from classical ramification factors and classical counts.
Rat classical_gw(const OrderedPartition& p1, const OrderedPartition& p2, TropicalCountCache& counts);

/// k Σ_{|P_a| = ka, |P_b| = kb} N[(P_a, P_b)] over ordered partitions of
/// lengths l1, l2 with zero parts allowed.
Rat gps_classical_coeff(LatticeVec ab, int k, int l1, int l2, TropicalCountCache& counts);
/// Coefficient of t^{(a+b)k} e_{k(a,b)} in log f_{(a,b)} of the classical
/// saturation of (1 + t x)^{l1}, (1 + t y)^{l2}.
Rat classical_commutator_coeff(LatticeVec ab, int k, int l1, int l2);

/// Lines θ̂[s_i ê_(1,0)] (i = 1..l1) and θ̂[t_j ê_(0,1)] (j = 1..l2), each
/// variable truncated at `order`.
CentralDiagram multiparameter_lines(int l1, int l2, int order);
/// Lines θ̂^{l1}[t ê_(1,0)], θ̂^{l2}[t ê_(0,1)] truncated at `order`.
CentralDiagram power_lines(int l1, int l2, int order);
/// Substitutes every central variable by the single variable of `target`
/// and re-truncates.
CentralDiagram specialize_multiparameter(const CentralDiagram& d, ContextPtr target);

/// ĉ-type coefficient of σ^j ê_{jkγ} for the (k, σ) part of a spectrum:
/// -(-v)^j / j · P(kγ) with (-v) -> (-v)^j.
QLaurent c_hat_term(const QLaurent& poincare, int j);

/// Generator images of a spectrum's wall operator computed by adjoint_action
/// and by the commutative log f / log g double sums; true if equal.
bool fg_series_check(const OmegaSpectrum& spectrum, ContextPtr ctx);

}  // namespace tvx
