#include <random>

#include <benchmark/benchmark.h>

#include "deltader/catalog.hpp"
#include "deltader/constructions.hpp"
#include "deltader/linalg.hpp"
#include "deltader/solver.hpp"

using namespace deltader;

namespace {

Matrix random_rational(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    const auto q = FieldConfig::rational();
    Matrix m(q, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(q, mpz_class(num(rng)), mpz_class(den(rng)));
    return m;
}

void BM_RrefRational(benchmark::State& state) {
    const auto m = random_rational(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16)->Arg(32);

void BM_AntiderivationsSl2(benchmark::State& state) {
    const auto a = catalog::sl2();
    const auto delta = a.scalar(-1);
    for (auto _ : state) benchmark::DoNotOptimize(delta_derivations(a, delta));
}
BENCHMARK(BM_AntiderivationsSl2);

void BM_DerivationsWittModular(benchmark::State& state) {
    const auto a = catalog::witt_modular(static_cast<std::uint64_t>(state.range(0)));
    const auto delta = a.scalar(1);
    for (auto _ : state) benchmark::DoNotOptimize(delta_derivations(a, delta));
}
BENCHMARK(BM_DerivationsWittModular)->Arg(5)->Arg(7)->Arg(11);

void BM_GeneralizedM2(benchmark::State& state) {
    const auto a = catalog::m2();
    const auto delta = a.scalar(1);
    for (auto _ : state) benchmark::DoNotOptimize(generalized_delta_derivations(a, delta));
}
BENCHMARK(BM_GeneralizedM2);

void BM_EvenSuperderivationsLieDouble(benchmark::State& state) {
    const auto d = lie_double(catalog::sl2());
    const auto delta = d.double_algebra.scalar(-1);
    for (auto _ : state) benchmark::DoNotOptimize(delta_superderivations(d.double_algebra, delta, MapParity::Even));
}
BENCHMARK(BM_EvenSuperderivationsLieDouble);

} // namespace

BENCHMARK_MAIN();
