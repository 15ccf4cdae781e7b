/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "tvx/central.hpp"
#include "tvx/geometry.hpp"
#include "tvx/parallel.hpp"

namespace tvx {

/// Wall with operator θ̂[c u_I ê_dir] (u_I a square-free monomial in the
/// nilpotent variables). The coefficient c is not stored: it is the product
/// of `mu` with the coefficients of the lines at the leaves of the
/// provenance tree.
struct ElementaryWall {
    Point base;
    double bx = 0, by = 0;  // base as doubles, for prefiltering only
    LatticeVec dir;
    bool line = false;
    std::uint64_t mask = 0;
    QLaurent mu;             // product of [mult]_q over provenance vertices
    int parent1 = -1, parent2 = -1;
    int round = 0;
    // Lines only: which input line, which term of its log, and (#J)! a.
    int source = -1;
    int multiple = 0;        // dir = multiple * primitive direction of the line
    QRational line_coeff;

    Support support() const { return {base, dir, !line}; }
};

class DegenerateConfiguration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PerturbedDiagram {
    CentralDiagram input;   // the lines being perturbed (central variables)
    ContextPtr ctx;         // central variables plus u_{ij}, j = 1..k_i
    std::vector<ElementaryWall> walls;
    std::vector<Point> vertices;  // distinct scattering points in creation order
    std::uint64_t seed = 0;
    int attempts = 0;
    int rounds = 0;

    /// c for wall i.
    QRational coefficient(int i) const;
    /// Nilpotent masks of the leaves below wall i, in provenance order.
    std::vector<int> leaves(int i) const;
    size_t ray_count() const;
};

/// Context with central variables t_i and u_{i1..ik_i}.
ContextPtr nilpotent_refinement(const ContextPtr& central);

/// Replaces each line of `lines` (logs in central variables only) by its
/// elementary lines, translated by independent offsets p/10007 with
/// |p| <= 10^6 drawn from rng.
PerturbedDiagram perturb_standard(const CentralDiagram& lines, std::mt19937_64& rng);

/// Adds rays round by round until no pair of walls with disjoint masks
/// (at least one of them created in the previous round) meets in a new point.
/// Throws DegenerateConfiguration if three walls with pairwise disjoint masks
/// take part in scattering at one point.
void saturate(PerturbedDiagram& d, Exec exec = Exec::Parallel);

/// Perturbs and saturates, resampling offsets on degeneracy (at most
/// max_attempts draws from one generator seeded with `seed`).
PerturbedDiagram perturb_and_saturate(const CentralDiagram& lines, std::uint64_t seed,
                                      Exec exec = Exec::Parallel, int max_attempts = 32);

/// Walls grouped by direction: elementary walls of one direction combined
/// into a single log in the central variables. Throws std::domain_error if
/// the u-coefficients are not symmetric (not in the image of t_i -> sum_j
/// u_ij) or not Laurent after dividing by the multinomial factors.
CentralDiagram asymptotic_collapse(const PerturbedDiagram& d);

/// Rays of the collapsed diagram as operators with Ω spectra.
std::vector<std::pair<LatticeVec, WallOperator>> merge_by_direction(const PerturbedDiagram& d);

// ---------------------------------------------------------------------------
// Path-ordered products on the perturbed diagram itself.

/// Closed polygon, traversed vertex 0 -> 1 -> ... -> 0.
struct Polygon {
    std::vector<Point> vertices;
};

/// θ_γ applied to z: crossings sorted along the path, θ_1^{ε_1} ∘ ... with
/// ε = +1 when (path direction, wall direction) is a positive basis. Throws
/// std::invalid_argument if the path meets a singular point, passes through
/// a polygon vertex on a wall, or runs along a wall.
TorusElementR path_apply(const PerturbedDiagram& d, const Polygon& path, const TorusElementR& z);
GeneratorImagesR path_ordered_product(const PerturbedDiagram& d, const Polygon& path);

/// Clockwise rectangle strictly enclosing every vertex, ray base and
/// pairwise wall intersection. Quadratic in the number of walls.
Polygon enclosing_loop(const PerturbedDiagram& d);

/// Clockwise square around p small enough that it only crosses walls through
/// p. Halves the size until that holds.
Polygon local_loop(const PerturbedDiagram& d, const Point& p);

/// Elementary action exp(sign * ad(c u_I ê_α / (v - v^{-1}))) on z.
TorusElementR elementary_apply(const QRational& c, std::uint64_t mask, LatticeVec alpha,
                               const TorusElementR& z, int sign);

}  // namespace tvx
