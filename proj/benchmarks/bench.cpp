#include <vector>

#include <benchmark/benchmark.h>

#include "fepstat/dist.hpp"
#include "fepstat/mc.hpp"
#include "fepstat/moments.hpp"
#include "fepstat/onesample.hpp"
#include "fepstat/rng.hpp"
#include "fepstat/specfun.hpp"

using namespace fepstat;

namespace {

void bm_ln_gamma(benchmark::State& state) {
    double x = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ln_gamma(x));
        x += 0.37;
        if (x > 170.0)
            x -= 169.0;
    }
}
BENCHMARK(bm_ln_gamma);

void bm_reg_inc_beta(benchmark::State& state) {
    double x = 0.02;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reg_inc_beta(x, 14.5, 14.5));
        x += 0.013;
        if (x > 0.97)
            x -= 0.95;
    }
}
BENCHMARK(bm_reg_inc_beta);

void bm_student_quantile(benchmark::State& state) {
    const auto t = Distribution::student_t(static_cast<double>(state.range(0)));
    double p = 0.51;
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantile(t, p));
        p += 0.0137;
        if (p > 0.99)
            p -= 0.48;
    }
}
BENCHMARK(bm_student_quantile)->Arg(4)->Arg(29);

void bm_fisher_quantile(benchmark::State& state) {
    const auto f = Distribution::fisher_f(8.0, 8.0);
    double p = 0.51;
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantile(f, p));
        p += 0.0137;
        if (p > 0.99)
            p -= 0.48;
    }
}
BENCHMARK(bm_fisher_quantile);

void bm_summarize(benchmark::State& state) {
    RngStream rng(1, 0);
    std::vector<double> v(static_cast<std::size_t>(state.range(0)));
    for (auto& x : v)
        x = rng.normal(0.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(summarize(v));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_summarize)->Arg(50)->Arg(1000);

void bm_mean_interval_pair(benchmark::State& state) {
    RngStream rng(2, 0);
    std::vector<double> v(29);
    for (auto& x : v)
        x = rng.normal(3.0, 2.0);
    const SampleSummary s = summarize(v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ci_mean_gaussian(s, 0.05));
        benchmark::DoNotOptimize(ci_mean_general(s, 0.05));
    }
}
BENCHMARK(bm_mean_interval_pair);

void bm_coverage_scenario(benchmark::State& state) {
    ScenarioConfig cfg;
    cfg.gen1 = {GeneratorKind::Normal, 3.0, 2.0, ""};
    cfg.n1 = 29;
    cfg.replications = static_cast<std::size_t>(state.range(0));
    cfg.target = Target::Mean;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_scenario(cfg, 42, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_coverage_scenario)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
