#include <benchmark/benchmark.h>

#include "congrlab/bernoulli.hpp"
#include "congrlab/binomial.hpp"
#include "congrlab/catalog.hpp"
#include "congrlab/harmonic.hpp"
#include "congrlab/scan.hpp"

using namespace congrlab;

static void BM_HarmonicTable(benchmark::State& state) {
    const PrimePowerModulus m(static_cast<std::uint64_t>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(HarmonicTable(m));
}
BENCHMARK(BM_HarmonicTable)->Arg(31)->Arg(97)->Arg(499);

static void BM_BinomAlphaMod(benchmark::State& state) {
    const PrimePowerModulus m(static_cast<std::uint64_t>(state.range(0)), 7);
    const PIntegerRational alpha(7, 3);
    for (auto _ : state) benchmark::DoNotOptimize(binom_alpha_mod(alpha, m));
}
BENCHMARK(BM_BinomAlphaMod)->Arg(31)->Arg(97)->Arg(499);

static void BM_BernoulliCache(benchmark::State& state) {
    for (auto _ : state) {
        BernoulliCache cache;
        cache.ensure(static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(cache.at(static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_BernoulliCache)->Arg(100)->Arg(496)->Unit(benchmark::kMillisecond);

// One scan work unit: every catalog case and sweep alpha at one prime.
static void BM_ScanPrimeUnit(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    warm_bernoulli(static_cast<unsigned>(p));
    const auto sweep = standard_alpha_sweep();
    for (auto _ : state) {
        PrimeContext ctx(p);
        for (const auto& c : default_catalog()) {
            if (c.uses_alpha) {
                for (const auto& a : sweep) benchmark::DoNotOptimize(verify_case(c, ctx, &a));
            } else {
                benchmark::DoNotOptimize(verify_case(c, ctx, nullptr));
            }
        }
    }
}
BENCHMARK(BM_ScanPrimeUnit)->Arg(97)->Arg(499)->Unit(benchmark::kMillisecond);

static void BM_LemmaSuites(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    warm_bernoulli(static_cast<unsigned>(p));
    for (auto _ : state) benchmark::DoNotOptimize(lemma_verdicts(p, lemma_suites()));
}
BENCHMARK(BM_LemmaSuites)->Arg(61)->Arg(199)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
