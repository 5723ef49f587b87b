#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "arcwalk/absorption.hpp"
#include "arcwalk/brownian.hpp"
#include "arcwalk/density.hpp"
#include "arcwalk/gof.hpp"
#include "arcwalk/lq.hpp"
#include "arcwalk/walk.hpp"

namespace {

void bm_step_p_family(benchmark::State& state) {
    arcwalk::rng stream(1);
    const arcwalk::walk_params params{arcwalk::walk_variant::p_family, 2.0};
    double x = 0.3;
    for (auto _ : state) {
        x = arcwalk::step(x, params, stream);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(bm_step_p_family);

void bm_simulate_x_chain(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto trace = arcwalk::simulate({arcwalk::walk_variant::x, 0.0}, 0.5, n, 0, 1, seed++);
        benchmark::DoNotOptimize(trace.states.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n));
}
BENCHMARK(bm_simulate_x_chain)->Arg(1 << 10)->Arg(1 << 14);

void bm_z_p(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(arcwalk::z_p(2.5));
}
BENCHMARK(bm_z_p);

void bm_density_model_build(benchmark::State& state) {
    for (auto _ : state) {
        arcwalk::density_model model(2.0);
        benchmark::DoNotOptimize(model.normalization());
    }
}
BENCHMARK(bm_density_model_build);

void bm_apply_kernel_arcsine(benchmark::State& state) {
    for (auto _ : state) {
        const double v = arcwalk::apply_kernel(
            [](double s) { return arcwalk::rho_arcsine(s); },
            [](double a, double b) { return arcwalk::kernel_x(a, b); }, 0.3);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_apply_kernel_arcsine);

void bm_sample_bridge(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    arcwalk::rng stream(7);
    for (auto _ : state) {
        auto path = arcwalk::sample_bridge(n, stream);
        benchmark::DoNotOptimize(path.values.data());
    }
}
BENCHMARK(bm_sample_bridge)->Arg(1 << 8)->Arg(1 << 12);

void bm_hidden_step(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    arcwalk::rng stream(7);
    double occ = 0.5;
    for (auto _ : state) {
        auto result = arcwalk::hidden_step(occ, n, stream);
        occ = std::min(1.0 - 1.0 / static_cast<double>(n),
                       std::max(1.0 / static_cast<double>(n), result.occupation));
        benchmark::DoNotOptimize(result.path.values.data());
    }
}
BENCHMARK(bm_hidden_step)->Arg(1 << 10);

void bm_ks_statistic(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    arcwalk::rng stream(11);
    std::vector<double> samples(n);
    for (auto& s : samples) s = arcwalk::arcsine_quantile(stream.uniform_open());
    for (auto _ : state) {
        const double d = arcwalk::ks_statistic(samples, arcwalk::arcsine_cdf);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_ks_statistic)->Arg(1 << 14);

void bm_lq_minimizer(benchmark::State& state) {
    const arcwalk::lq_query query{-1.0, 2.0, 0.3};
    for (auto _ : state) benchmark::DoNotOptimize(arcwalk::lq_minimizer(query));
}
BENCHMARK(bm_lq_minimizer);

void bm_simulate_absorbing(benchmark::State& state) {
    std::uint64_t seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            arcwalk::simulate_absorbing(-1.0, 0.3, 10000, 1e-9, seed++));
    }
}
BENCHMARK(bm_simulate_absorbing);

} // namespace

BENCHMARK_MAIN();
