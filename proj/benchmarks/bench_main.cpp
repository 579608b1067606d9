#include "chroma/extensions.hpp"
#include "chroma/hopf.hpp"
#include "chroma/weyl.hpp"
#include "corpus.hpp"

#include <benchmark/benchmark.h>

using namespace chroma;

static void BM_OrbitC2xC2(benchmark::State& state) {
    Datum e = corpus::c2xc2();
    for (auto _ : state) benchmark::DoNotOptimize(weyl_orbit(e).nodes.size());
}
BENCHMARK(BM_OrbitC2xC2)->Unit(benchmark::kMillisecond);

static void BM_AxiomsBicrossed36(benchmark::State& state) {
    MatchedPair mp = corpus::forpro1();
    Bicrossed b = build_bicrossed(mp, trivial_sigma(mp), trivial_tau(mp));
    for (auto _ : state) benchmark::DoNotOptimize(check_axioms(b.algebra, Mode::plain).all_pass());
}
BENCHMARK(BM_AxiomsBicrossed36)->Unit(benchmark::kMillisecond);

static void BM_AutExtForpro(benchmark::State& state) {
    MatchedPair mp = corpus::forpro();
    ExtAutomorphism f = corpus::forpro_auto(1);
    for (auto _ : state) benchmark::DoNotOptimize(aut_ext_solve(mp, f.g, f.h, 7).solution_count);
}
BENCHMARK(BM_AutExtForpro)->Unit(benchmark::kMillisecond);

static void BM_CyclotomicMul(benchmark::State& state) {
    const long long n = state.range(0);
    Cyclotomic a, b;
    for (long long k = 0; k < n; k += 3) a += Cyclotomic::embed(Rational01(k, n), n);
    for (long long k = 1; k < n; k += 5) b += Cyclotomic::embed(Rational01(k, n), n);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(12)->Arg(60)->Arg(210);
BENCHMARK_MAIN();
