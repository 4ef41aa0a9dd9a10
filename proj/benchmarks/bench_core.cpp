#include <benchmark/benchmark.h>

#include "primcoh/cone.hpp"
#include "primcoh/linalg.hpp"
#include "primcoh/model_io.hpp"
#include "primcoh/sweep.hpp"

#include <random>

using namespace primcoh;

namespace {

RatMatrix random_matrix(int n, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rational(num(eng), den(eng));
    return m;
}

void BM_rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RatMatrix m = random_matrix(n, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(m));
    }
}
BENCHMARK(BM_rank)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_invert(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RatMatrix m = random_matrix(n, 7); // random matrices are a.s. invertible
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert(m));
    }
}
BENCHMARK(BM_invert)->Arg(8)->Arg(16)->Arg(32);

void BM_assemble(benchmark::State& state) {
    const ModelDocument t6 = builtin_model("t6");
    const BundleData b = trivial_bundle(6, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble(b, t6.spec));
    }
}
BENCHMARK(BM_assemble)->Arg(1)->Arg(2)->Arg(4);

void BM_cohomology_t6(benchmark::State& state) {
    const ModelDocument t6 = builtin_model("t6");
    const ConeComplex c = assemble(t6.bundles.at("trivial"), t6.spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cohomology_dims(c));
    }
}
BENCHMARK(BM_cohomology_t6);

void BM_sweep_kt_with_dims(benchmark::State& state) {
    const ModelDocument kt = builtin_model("kt");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sweep(kt.bundles.at("E2"), kt.bundles.at("L"), kt.spec, 5, true));
    }
}
BENCHMARK(BM_sweep_kt_with_dims);

} // namespace

BENCHMARK_MAIN();
