#include <doctest.h>

#include "tvx/tropical.hpp"

using namespace tvx;

namespace {
TropicalCurve one_vertex(LatticeVec a, LatticeVec b) {
    TropicalCurve c;
    c.vertices.push_back({Point{0, 0}, a, b, -1, -2});
    c.outgoing = a + b;
    return c;
}
}  // namespace

TEST_CASE("vertex multiplicity") {
    CHECK(vertex_multiplicity(one_vertex({1, 0}, {0, 1}), 0) == 1);
    CHECK(vertex_multiplicity(one_vertex({2, 0}, {0, 1}), 0) == 2);
    CHECK(vertex_multiplicity(one_vertex({1, 1}, {1, -1}), 0) == 2);
    // any two of the three edges give the same value
    for (LatticeVec a : {LatticeVec{2, 0}, LatticeVec{1, 3}, LatticeVec{-1, 2}})
        for (LatticeVec b : {LatticeVec{0, 1}, LatticeVec{3, 1}}) {
            int m = vertex_multiplicity(one_vertex(a, b), 0);
            CHECK(std::abs(pairing(a, a + b)) == m);
            CHECK(std::abs(pairing(a + b, b)) == m);
        }
}

TEST_CASE("Block-Goettsche multiplicity") {
    CHECK(bg_multiplicity(one_vertex({1, 0}, {0, 1})) == QLaurent(1));
    CHECK(bg_multiplicity(one_vertex({2, 0}, {0, 1})).to_string() == "v + v^-1");
    TropicalCurve c = one_vertex({2, 0}, {0, 1});
    c.vertices.push_back({Point{1, 1}, {2, 1}, {0, 3}, 0, -3});
    CHECK(bg_multiplicity(c) == q_number(2) * q_number(6));
    CHECK(eval_at_one(bg_multiplicity(c)) == Rat(c.mikhalkin()));
}

TEST_CASE("small enumerations") {
    std::mt19937_64 rng(5);
    std::vector<LatticeVec> ab{{1, 0}, {0, 1}};
    auto curves = enumerate_curves(sample_ends(ab, {{{1}, {1}}}, rng));
    REQUIRE(curves.size() == 1);
    CHECK(curves[0].vertices.size() == 1);
    CHECK(curves[0].outgoing == LatticeVec{1, 1});

    for (int trial = 0; trial < 10; ++trial) {
        curves = enumerate_curves(sample_ends(ab, {{{1, 1}, {1}}}, rng));
        REQUIRE(curves.size() == 1);
        CHECK(vertex_multiplicity(curves[0], 0) == 1);
        CHECK(vertex_multiplicity(curves[0], 1) == 1);
        curves = enumerate_curves(sample_ends(ab, {{{1}, {1, 1}}}, rng));
        CHECK(curves.size() == 1);
    }
}

TEST_CASE("refined counts: examples") {
    CHECK(refined_tropical_count({1, 0}, {0, 1}, {{{1}, {1}}}, 1) == QLaurent(1));
    CHECK(refined_tropical_count({1, 0}, {0, 1}, {{{2}, {1}}}, 1).to_string() == "v + v^-1");
    CHECK(classical_tropical_count({1, 0}, {0, 1}, {{{2}, {1}}}, 1) == 2);
    CHECK(classical_tropical_count({1, 0}, {0, 1}, {{{1}, {1}}}, 1) == 1);
}

TEST_CASE("curve structure: balancing, vertex count, specialization") {
    std::mt19937_64 rng(17);
    std::vector<LatticeVec> ab{{1, 0}, {0, 1}};
    for (const WeightVector& w : {WeightVector{{{1, 1}, {1, 2}}}, WeightVector{{{1, 2}, {1, 1, 1}}},
                                  WeightVector{{{2, 2}, {1, 3}}}}) {
        EndConfiguration cfg = sample_ends(ab, w, rng);
        for (const auto& c : enumerate_curves(cfg)) {
            CHECK(c.vertices.size() + 1 == cfg.ends.size());
            CHECK(c.outgoing == LatticeVec{w.total(0), w.total(1)});
            // the outgoing edge of each vertex is the sum of its incoming edges and
            // is the incoming edge of its parent
            for (size_t v = 0; v + 1 < c.vertices.size(); ++v) {
                LatticeVec out = c.vertices[v].in1 + c.vertices[v].in2;
                bool found = false;
                for (const auto& u : c.vertices)
                    if ((u.child1 == static_cast<int>(v) && u.in1 == out) ||
                        (u.child2 == static_cast<int>(v) && u.in2 == out))
                        found = true;
                CHECK(found);
            }
            CHECK(eval_at_one(bg_multiplicity(c)) == Rat(c.mikhalkin()));
        }
    }
}

TEST_CASE("refined counts do not depend on the configuration") {
    for (int n = 2; n <= 5; ++n)
        for (int a = 1; a < n; ++a)
            for (const auto& w1 : weight_lists(a))
                for (const auto& w2 : weight_lists(n - a)) {
                    WeightVector w{{w1, w2}};
                    QLaurent r = refined_tropical_count({1, 0}, {0, 1}, w, 1000 + static_cast<unsigned>(n), 6);
                    CHECK(is_bar_symmetric(r));
                }
}

TEST_CASE("three incoming directions") {
    std::vector<LatticeVec> dirs{{1, 0}, {0, 1}, {-1, -1}};
    // ends in directions summing to zero have no outgoing edge; (1,0),(0,1),(1,1)
    dirs[2] = {1, 1};
    QLaurent r = refined_tropical_count(dirs, {{{1}, {1}, {1}}}, 3, 4);
    CHECK(is_bar_symmetric(r));
    CHECK(eval_at_one(r) > 0);
}

TEST_CASE("weight lists") {
    CHECK(weight_lists(0).size() == 1);
    CHECK(weight_lists(4).size() == 5);
    CHECK(weight_lists(6).size() == 11);
    CHECK(weight_lists(3) == std::vector<WeightList>{{1, 1, 1}, {1, 2}, {3}});
}
