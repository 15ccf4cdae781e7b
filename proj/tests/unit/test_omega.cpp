#include <doctest.h>

#include "gen.hpp"
#include "tvx/central.hpp"
#include "tvx/omega.hpp"

using namespace tvx;
namespace tg = tvx::testgen;

TEST_CASE("extract_omegas examples") {
    auto ctx = SeriesContext::uniform(1, 6);
    Multidegree s = ctx->central({1});
    auto one = extract_omegas(qdilog_log(ctx, s, {1, 0}, 0, 1));
    CHECK(one.poincare.size() == 1);
    CHECK(one.omega(1, 0, s) == 1);
    auto two = extract_omegas(qdilog_log(ctx, s, {1, 0}, 0, 2));
    CHECK(two.omega(1, 0, s) == 2);
    // E(-v σ ê) = θ̂^{(-1)^1 Ω_1}[(-v)^1 σ ê] with exponent 1, so Ω_1 = -1.
    auto shifted = extract_omegas(qdilog_log(ctx, s, {1, 0}, 1, 1));
    CHECK(shifted.poincare.size() == 1);
    CHECK(shifted.omega(1, 1, s) == -1);
    CHECK(wall_operator_log(ctx, shifted.to_operator()) == qdilog_log(ctx, s, {1, 0}, 1, 1));
}

TEST_CASE("omega round trip on random spectra") {
    auto ctx = SeriesContext::make({"s", "t"}, {6, 6});
    const Rat omegas[] = {1, -1, Rat(1, 2), Rat(-1, 2), 2};
    const LatticeVec dirs[] = {{1, 0}, {1, 1}, {1, 2}, {2, 1}, {0, 1}};
    for (int rep = 0; rep < 60; ++rep) {
        LatticeVec g = dirs[tg::uniform(0, 4)];
        WallOperator op{g, {}};
        for (int i = tg::uniform(1, 4); i > 0; --i) {
            int k = tg::uniform(1, 3);
            op.spectrum.push_back({k, tg::uniform(-2, 2), omegas[tg::uniform(0, 4)], ctx->central({k * g.a, k * g.b})});
        }
        OmegaSpectrum s = extract_omegas(wall_operator_log(ctx, op));
        CHECK(s == spectrum_of(op));
    }
}

TEST_CASE("rays of saturated two-line diagrams have Laurent P(kγ)") {
    for (int l = 1; l <= 2; ++l) {
        auto ctx = SeriesContext::make({"s", "t"}, {4, 4});
        CentralDiagram d{ctx, {standard_line(ctx, {1, 0}, 0, l), standard_line(ctx, {0, 1}, 1, l)}};
        CentralDiagram sat = saturate_central(d);
        std::vector<std::pair<WallOperator, bool>> ops;
        for (const auto& w : sat.walls) {
            OmegaSpectrum s = extract_omegas(w.log);
            for (const auto& [key, p] : s.poincare) CHECK(is_bar_symmetric(p));
            ops.emplace_back(s.to_operator(), w.line);
        }
        CHECK(loop_product(ctx, ops).is_identity());
    }
}
