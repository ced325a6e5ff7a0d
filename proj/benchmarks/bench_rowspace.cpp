#include <benchmark/benchmark.h>

#include "ringlab/fp_algebra.hpp"

using namespace ringlab;

static const char* kSevenGens =
    "algebra p=2 gens=[a0,a1,a2,b0,b1,b2,c] unital truncate=4\n"
    "rel a0*b0\nrel a0*b1 + a1*b0\nrel a0*b2 + a1*b1 + a2*b0\n"
    "rel a1*b2 + a2*b1\nrel a2*b2\n"
    "pattern a0%+b0\npattern a2%+b2\npattern (a0+a1+a2)%+(b0+b1+b2)\n";

static const char* kSixGensLong =
    "algebra p=2 gens=[a0,a1,a2,b0,b1,b2] unital truncate=6\n"
    "rel a0*b0\nrel a0*b1 + a1*b0\nrel a0*b2 + a1*b1 + a2*b0\n"
    "rel a1*b2 + a2*b1\nrel a2*b2\n";

static void BM_rowspace_seven_gens(benchmark::State& state) {
    Presentation pres = parse_presentation(kSevenGens);
    for (auto _ : state) {
        TruncatedAlgebra alg(pres);
        benchmark::DoNotOptimize(alg.ideal_rank());
    }
}
BENCHMARK(BM_rowspace_seven_gens);

static void BM_rowspace_six_gens_length6(benchmark::State& state) {
    Presentation pres = parse_presentation(kSixGensLong);
    for (auto _ : state) {
        TruncatedAlgebra alg(pres);
        benchmark::DoNotOptimize(alg.ideal_rank());
    }
}
BENCHMARK(BM_rowspace_six_gens_length6)->Unit(benchmark::kMillisecond);

static void BM_membership_reduce(benchmark::State& state) {
    Presentation pres = parse_presentation(kSixGensLong);
    TruncatedAlgebra alg(pres);
    AlgValue probe = alg.parse("b0*a0*b1*a1");
    for (auto _ : state) {
        auto ans = alg.in_ideal(probe);
        benchmark::DoNotOptimize(ans.in_ideal);
    }
}
BENCHMARK(BM_membership_reduce);
