/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tvx/invariants.hpp"
#include "tvx/qrational.hpp"

namespace tvx {

using DimVector = std::vector<int>;

/// Bipartite quiver: vertices 0..sources-1 are sources, the rest sinks.
/// arrows[i][j] counts arrows from source i to sink j.
struct QuiverSpec {
    int sources = 0;
    int sinks = 0;
    std::vector<std::vector<int>> arrows;

    int vertices() const { return sources + sinks; }
    int arrow_count() const;
    /// ⟨d,e⟩ = Σ_v d_v e_v − Σ_{i,j} A_ij d_i e_j
    long euler(const DimVector& d, const DimVector& e) const;
    long antisymmetric(const DimVector& d, const DimVector& e) const { return euler(d, e) - euler(e, d); }
};

/// Slope μ(d) = Σ Θ_v d_v / Σ κ_v d_v. κ = 1 everywhere is the usual slope.
struct Stability {
    std::vector<Rat> theta;
    std::vector<Rat> kappa;

    Rat slope(const DimVector& d) const;
    /// Θ = 1 on sources, 0 on sinks, κ = 1.
    static Stability level(const QuiverSpec& q);
    /// Θ = w on sources, 0 on sinks, κ = w, for vertex weights w.
    static Stability weighted(const QuiverSpec& q, const std::vector<int>& weights);
};

QuiverSpec build_bipartite(int l1, int l2);

/// k^i_{w}: for every part (sources first, then sinks) the number of copies
/// of weight w. Σ_w w k_w equals the part.
struct Refinement {
    std::vector<std::map<int, int>> sources;
    std::vector<std::map<int, int>> sinks;

    /// Sorted weights of all source (0) or sink (1) copies.
    WeightList weights(int side) const;
    /// ∏ (−1)^{k(w−1)} / (k! w^k [w]^k_q)
    QRational coefficient() const;
    std::string to_string() const;
};

struct AbelianQuiver {
    QuiverSpec quiver;
    DimVector dim;             // thin
    std::vector<int> weights;  // level of each vertex
};

/// Vertex copies ordered by (part, weight, copy); w·w' arrows between a
/// source copy of weight w and a sink copy of weight w'. Throws
/// std::invalid_argument for an empty refinement.
AbelianQuiver build_abelianized(const Refinement& r);

std::vector<Refinement> enumerate_refinements(const OrderedPartition& p1, const OrderedPartition& p2);

/// Harder-Narasimhan recursion for [R^sst_d]/[G_d] as rational functions of
/// v (q = v^2). Memoized per instance.
class HarderNarasimhan {
public:
    HarderNarasimhan(QuiverSpec q, Stability s) : q_(std::move(q)), s_(std::move(s)) {}

    /// [R_d]/[G_d] = q^{−⟨d,d⟩} / ∏_v ∏_{j=1}^{d_v} (1 − q^{−j})
    QRational all(const DimVector& d) const;
    const QRational& semistable(const DimVector& d);
    /// Contribution of every HN type (d^1, …, d^s), μ(d^1) > … > μ(d^s),
    /// enumerated directly.
    std::map<std::vector<DimVector>, QRational> strata(const DimVector& d);

    const QuiverSpec& quiver() const { return q_; }
    const Stability& stability() const { return s_; }

private:
    const QRational& tail(const DimVector& e, const Rat& bound, bool bounded);
    QRational type_factor(const std::vector<DimVector>& type);

    QuiverSpec q_;
    Stability s_;
    std::map<DimVector, QRational> sst_;
    std::map<std::tuple<DimVector, Rat, bool>, QRational> tail_;
};

QRational hn_stack_series(const QuiverSpec& q, const DimVector& d, const Stability& s);

/// True when no 0 < e < d has μ(e) = μ(d).
bool generic_for(const DimVector& d, const Stability& s);

/// q^{−dim/2}(q − 1)[R^sst_d]/[G_d] with dim = 1 − ⟨d,d⟩. Throws
/// std::domain_error when d is not generic for s or the result is not a
/// bar-symmetric Laurent polynomial with nonnegative integer coefficients.
QLaurent stable_poincare(const QuiverSpec& q, const DimVector& d, const Stability& s);
QLaurent stable_poincare(HarderNarasimhan& hn, const DimVector& d);

DimVector induced_dimension(const OrderedPartition& p1, const OrderedPartition& p2);

struct MpsTerm {
    Refinement refinement;
    QRational coefficient;
    QLaurent abelian;
};

struct MpsReport {
    QLaurent lhs;
    QRational rhs;
    std::vector<MpsTerm> terms;
    bool ok = false;
};

/// Nonabelian side with level stability; abelian sides with weighted
/// stability (see Stability::weighted).
MpsReport mps_report(const OrderedPartition& p1, const OrderedPartition& p2);
bool mps_check(const OrderedPartition& p1, const OrderedPartition& p2);

struct ComparisonReport {
    QRational tropical;
    QLaurent quiver;
    bool refinements_ok = false;  // abelian P̂ = N̂^trop(w(k1), w(k2)) for every refinement
    bool ok = false;
};

ComparisonReport comparison_report(const OrderedPartition& p1, const OrderedPartition& p2,
                                   TropicalCountCache& counts);
bool comparison_check(const OrderedPartition& p1, const OrderedPartition& p2, TropicalCountCache& counts);

/// gcd(|P1|, |P2|) == 1
bool coprime(const OrderedPartition& p1, const OrderedPartition& p2);

}  // namespace tvx
