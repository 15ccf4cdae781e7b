/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tvx/scattering.hpp"

namespace tvx {

/// Sorted weights w_1 <= ... <= w_l of the ends parallel to one direction.
using WeightList = std::vector<int>;

struct WeightVector {
    std::vector<WeightList> w;  // one list per incoming direction
    int total(size_t i) const;
    std::string to_string() const;
};

/// One end: the line base + R (weight * α_i).
struct EndLine {
    int direction = 0;
    int weight = 1;
    Point base;
};

struct EndConfiguration {
    std::vector<LatticeVec> alphas;
    std::vector<EndLine> ends;
};

/// Ends for w with offsets p/10007, |p| <= 10^6, drawn from rng.
EndConfiguration sample_ends(const std::vector<LatticeVec>& alphas, const WeightVector& w, std::mt19937_64& rng);

/// Trivalent vertex: position and the two incoming weighted edge vectors
/// (weight times primitive direction). The outgoing edge is their sum.
struct CurveVertex {
    Point position;
    LatticeVec in1, in2;
    int child1 = -1, child2 = -1;  // vertex indices, or -1 - end index for an end
};

/// Rational plane tropical curve with the configured ends and one outgoing
/// unbounded edge. Vertices are stored children first; the last vertex is
/// the root of the outgoing edge.
struct TropicalCurve {
    std::vector<int> ends;  // end indices in leaf order
    std::vector<CurveVertex> vertices;
    LatticeVec outgoing;

    long mikhalkin() const;
};

/// w(E1) w(E2) |det(v1, v2)| for two edges at the vertex.
int vertex_multiplicity(const TropicalCurve& c, size_t vertex);
/// Product of [μ(h, V)]_q over the vertices.
QLaurent bg_multiplicity(const TropicalCurve& c);

/// All curves through every configured end, read off the provenance trees of
/// the rays of the saturated diagram of unit-coefficient end walls.
/// Throws DegenerateConfiguration for non-generic ends.
std::vector<TropicalCurve> enumerate_curves(const EndConfiguration& ends, Exec exec = Exec::Serial);

/// Σ_curves μ_q on `configs` independent generic configurations drawn from
/// `seed`; throws std::runtime_error if two configurations disagree.
QLaurent refined_tropical_count(const std::vector<LatticeVec>& alphas, const WeightVector& w,
                                std::uint64_t seed, int configs = 2);
QLaurent refined_tropical_count(LatticeVec alpha1, LatticeVec alpha2, const WeightVector& w,
                                std::uint64_t seed, int configs = 2);
Rat classical_tropical_count(LatticeVec alpha1, LatticeVec alpha2, const WeightVector& w, std::uint64_t seed,
                             int configs = 2);

/// All sorted weight lists with sum n (n = 0 gives the empty list).
std::vector<WeightList> weight_lists(int n);

}  // namespace tvx
