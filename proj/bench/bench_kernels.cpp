// Serial reference vs OpenMP path for the two parallel kernels.
#include <benchmark/benchmark.h>

#include "tvx/scattering.hpp"
#include "tvx/suites.hpp"
#include "tvx/torus.hpp"

using namespace tvx;

namespace {

void BM_Saturate(benchmark::State& state, Exec exec) {
    CentralDiagram lines = standard_diagram({{1, 0}, {0, 1}}, {2, 2}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PerturbedDiagram d = perturb_and_saturate(lines, kDefaultSeed, exec);
        benchmark::DoNotOptimize(d.walls.size());
    }
}

TorusElement dense(ContextPtr ctx, int span) {
    TorusElement x(ctx);
    for (int a = 0; a <= span; ++a)
        for (int b = 0; b <= span; ++b)
            for (int d = 0; d <= ctx->order(0); ++d)
                x.add_term(ctx->central({d}), {a, b}, QLaurent::monomial(a - b, Rat(a + d + 1, b + 1)));
    return x;
}

void BM_TwistedProduct(benchmark::State& state, Exec exec) {
    auto ctx = SeriesContext::make({"t"}, {6});
    TorusElement x = dense(ctx, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(twisted_product(x, x, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Saturate, serial, Exec::Serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Saturate, parallel, Exec::Parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TwistedProduct, serial, Exec::Serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TwistedProduct, parallel, Exec::Parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
