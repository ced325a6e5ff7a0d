#include <benchmark/benchmark.h>

#include "ringlab/construct.hpp"
#include "ringlab/radicals.hpp"

using namespace ringlab;

static void BM_prime_radical(benchmark::State& state) {
    FiniteRing ring = eval_expr("U(2,Z(4))");
    for (auto _ : state) {
        ElementSubset np = prime_radical(ring);
        benchmark::DoNotOptimize(np.size());
    }
}
BENCHMARK(BM_prime_radical);

static void BM_jacobson_radical(benchmark::State& state) {
    FiniteRing ring = eval_expr("U(2,Z(4))");
    for (auto _ : state) {
        ElementSubset j = jacobson_radical(ring);
        benchmark::DoNotOptimize(j.size());
    }
}
BENCHMARK(BM_jacobson_radical);

static void BM_validate_tables(benchmark::State& state) {
    FiniteRing ring = eval_expr("U(2,Z(4))");
    auto add = ring.add_table();
    auto mul = ring.mul_table();
    for (auto _ : state) {
        FiniteRing copy = FiniteRing::validate(ring.order(), add, mul, ring.one(), "bench");
        benchmark::DoNotOptimize(copy.order());
    }
}
BENCHMARK(BM_validate_tables);
