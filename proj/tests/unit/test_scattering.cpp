#include <doctest.h>

#include <chrono>
#include <iostream>

#include "tvx/omega.hpp"
#include "tvx/scattering.hpp"

using namespace tvx;

namespace {

CentralDiagram lines_of(ContextPtr ctx, const std::vector<LatticeVec>& dirs, const std::vector<int>& ell) {
    CentralDiagram d{ctx, {}};
    for (size_t i = 0; i < dirs.size(); ++i)
        d.walls.push_back(standard_line(ctx, dirs[i], static_cast<int>(i), ell[i]));
    return d;
}

std::map<LatticeVec, WallLog> rays_by_direction(const CentralDiagram& d) {
    std::map<LatticeVec, WallLog> out;
    for (const auto* r : d.rays()) out.emplace(r->gamma(), r->log);
    return out;
}

bool same_walls(const PerturbedDiagram& x, const PerturbedDiagram& y) {
    if (x.walls.size() != y.walls.size()) return false;
    for (size_t i = 0; i < x.walls.size(); ++i) {
        const auto& a = x.walls[i];
        const auto& b = y.walls[i];
        if (!(a.base == b.base) || a.dir != b.dir || a.mask != b.mask || a.parent1 != b.parent1 ||
            a.parent2 != b.parent2 || !(a.mu == b.mu))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("elementary lines of a standard line") {
    auto ctx = SeriesContext::make({"t"}, {3});
    std::mt19937_64 rng(1);
    PerturbedDiagram d = perturb_standard({ctx, {standard_line(ctx, {1, 0}, 0, 1)}}, rng);
    // subsets J of {1,2,3}: 3 + 3 + 1
    REQUIRE(d.walls.size() == 7);
    CHECK(d.ctx->nilpotent_count() == 3);
    for (const auto& w : d.walls) {
        int j = std::popcount(w.mask);
        CHECK(w.dir == LatticeVec{j, 0});
        // (#J)! * (-1)^{j+1} / (j [j]_q)
        QRational expect(QLaurent(Rat(j % 2 ? 1 : -1) * factorial(j - 1)),
                         q_number(j));
        CHECK(w.line_coeff == expect);
    }
}

TEST_CASE("two nilpotent lines produce one ray") {
    auto ctx = SeriesContext::make({"s", "t"}, {1, 1});
    PerturbedDiagram d = perturb_and_saturate(lines_of(ctx, {{1, 0}, {0, 1}}, {1, 1}), 7);
    REQUIRE(d.ray_count() == 1);
    CHECK(d.walls.back().dir == LatticeVec{1, 1});
    CHECK(d.coefficient(static_cast<int>(d.walls.size() - 1)) == QRational(1));
    CHECK(d.vertices.size() == 1);
}

TEST_CASE("collapsed rays agree with order-by-order saturation") {
    struct Case {
        std::vector<LatticeVec> dirs;
        std::vector<int> ell;
        int k;
    };
    std::vector<Case> cases{{{{1, 0}, {0, 1}}, {1, 1}, 3}, {{{1, 0}, {0, 1}}, {2, 1}, 2},
                            {{{1, 0}, {0, 1}}, {2, 2}, 2}, {{{1, 0}, {0, 1}, {1, 1}}, {1, 1, 1}, 2},
                            {{{1, 0}, {1, 2}}, {1, 1}, 2},  {{{1, 0}, {0, 1}}, {1, 2}, 3}};
    for (const auto& c : cases) {
        auto ctx = SeriesContext::uniform(static_cast<int>(c.dirs.size()), c.k);
        CentralDiagram lines = lines_of(ctx, c.dirs, c.ell);
        PerturbedDiagram d = perturb_and_saturate(lines, 11);
        CHECK(d.rounds <= d.ctx->nilpotent_count());
        CentralDiagram collapsed = asymptotic_collapse(d);
        auto tropical = rays_by_direction(collapsed);
        auto central = rays_by_direction(saturate_central(lines));
        CHECK(tropical == central);
        CHECK(loop_product(collapsed).is_identity());
        // lines collapse back to the input lines
        size_t nlines = 0;
        for (const auto& w : collapsed.walls)
            if (w.line) ++nlines;
        CHECK(nlines == c.dirs.size());
    }
}

TEST_CASE("every scattering point is locally consistent") {
    auto ctx = SeriesContext::uniform(2, 2);
    PerturbedDiagram d = perturb_and_saturate(lines_of(ctx, {{1, 0}, {0, 1}}, {2, 1}), 3);
    REQUIRE(!d.vertices.empty());
    for (const auto& p : d.vertices) CHECK(path_ordered_product(d, local_loop(d, p)).is_identity());
}

TEST_CASE("enclosing loop of the perturbed diagram") {
    auto ctx = SeriesContext::uniform(2, 2);
    CentralDiagram lines = lines_of(ctx, {{1, 0}, {0, 1}}, {1, 1});
    PerturbedDiagram d = perturb_and_saturate(lines, 5);
    CHECK(path_ordered_product(d, enclosing_loop(d)).is_identity());
    // without the rays the loop is not the identity
    PerturbedDiagram bare = d;
    bare.walls.erase(std::remove_if(bare.walls.begin(), bare.walls.end(), [](const auto& w) { return !w.line; }),
                     bare.walls.end());
    CHECK_FALSE(path_ordered_product(bare, enclosing_loop(bare)).is_identity());
}

TEST_CASE("serial and parallel pair discovery agree") {
    auto ctx = SeriesContext::uniform(2, 3);
    CentralDiagram lines = lines_of(ctx, {{1, 0}, {0, 1}}, {2, 2});
    PerturbedDiagram a = perturb_and_saturate(lines, 42, Exec::Serial);
    PerturbedDiagram b = perturb_and_saturate(lines, 42, Exec::Parallel);
    CHECK(same_walls(a, b));
}

TEST_CASE("merged spectra do not depend on the perturbation") {
    auto ctx = SeriesContext::uniform(2, 3);
    CentralDiagram lines = lines_of(ctx, {{1, 0}, {0, 1}}, {2, 1});
    auto ref = rays_by_direction(asymptotic_collapse(perturb_and_saturate(lines, 1)));
    for (std::uint64_t seed : {2u, 3u, 99u}) {
        PerturbedDiagram d = perturb_and_saturate(lines, seed);
        CHECK(rays_by_direction(asymptotic_collapse(d)) == ref);
    }
    for (const auto& [g, op] : merge_by_direction(perturb_and_saturate(lines, 4))) {
        CHECK(g.is_primitive());
        CHECK(op.gamma == g);
        for (const auto& [key, P] : spectrum_of(op).poincare) CHECK(is_bar_symmetric(P));
    }
}

TEST_CASE("perturbation is degenerate when offsets coincide") {
    auto ctx = SeriesContext::uniform(2, 1);
    std::mt19937_64 rng(9);
    PerturbedDiagram d = perturb_standard(lines_of(ctx, {{1, 0}, {1, 0}}, {1, 1}), rng);
    d.walls[1].base = d.walls[0].base;
    CHECK_THROWS_AS(saturate(d), DegenerateConfiguration);
}

TEST_CASE("shared scattering points are locally consistent") {
    // at k = 3 collinear rays of curves with equal leaves meet further walls
    // at common points
    auto ctx = SeriesContext::uniform(2, 3);
    PerturbedDiagram d = perturb_and_saturate(lines_of(ctx, {{1, 0}, {0, 1}}, {1, 1}), 11);
    size_t rays = d.ray_count();
    CHECK(d.vertices.size() < rays);
    for (const auto& p : d.vertices) CHECK(path_ordered_product(d, local_loop(d, p)).is_identity());
}

TEST_CASE("three directions: enclosing rectangle and collapse") {
    auto ctx = SeriesContext::uniform(3, 2);
    CentralDiagram lines = lines_of(ctx, {{1, 0}, {0, 1}, {1, 1}}, {1, 2, 1});
    PerturbedDiagram d = perturb_and_saturate(lines, 8);
    CHECK(path_ordered_product(d, enclosing_loop(d)).is_identity());
    CHECK(rays_by_direction(asymptotic_collapse(d)) == rays_by_direction(saturate_central(lines)));
}
