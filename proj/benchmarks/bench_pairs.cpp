#include <benchmark/benchmark.h>

#include "ringlab/construct.hpp"
#include "ringlab/deciders.hpp"

using namespace ringlab;

static void BM_zero_product_pairs(benchmark::State& state) {
    FiniteRing ring = eval_expr(state.range(0) == 0 ? "U(2,Z(2))" : "U(2,Z(4))");
    uint32_t degree = uint32_t(state.range(1));
    for (auto _ : state) {
        uint64_t count = 0;
        zero_product_pairs(ring, degree, uint64_t(1) << 40,
                           [&](const BoundedPolynomial&, const BoundedPolynomial&) {
                               ++count;
                               return true;
                           });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_zero_product_pairs)->Args({0, 1})->Args({0, 2})->Args({1, 1});

static void BM_strongly_nil_ifp_scan(benchmark::State& state) {
    FiniteRing ring = eval_expr("U(2,Z(4))");
    DecideContext ctx = DecideContext::build(ring);
    for (auto _ : state) {
        Verdict v = decide_armendariz_family(ring, Prop::StronglyNilIfp, 1, uint64_t(1) << 40,
                                             &ctx);
        benchmark::DoNotOptimize(v.status);
    }
}
BENCHMARK(BM_strongly_nil_ifp_scan);

static void BM_sandwich_context(benchmark::State& state) {
    FiniteRing ring = eval_expr("U(2,Z(4))");
    for (auto _ : state) {
        DecideContext ctx = DecideContext::build(ring);
        benchmark::DoNotOptimize(ctx.sandwich.size());
    }
}
BENCHMARK(BM_sandwich_context);

BENCHMARK_MAIN();
