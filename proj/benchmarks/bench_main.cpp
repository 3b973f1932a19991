#include "wentzell/fdtd.hpp"
#include "wentzell/holo.hpp"
#include "wentzell/modes.hpp"
#include "wentzell/smearing.hpp"
#include "wentzell/spectral.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>

using namespace wentzell;

namespace {

TestFunction gaussian()
{
    TestFunction f;
    f.bulk = [](double t, double z) { return std::exp(-t * t / 0.18 - (z - 0.3) * (z - 0.3) / 0.045); };
    f.t_min = -3.6;
    f.t_max = 3.6;
    return f;
}

} // namespace

static void BM_SolveQ(benchmark::State& state)
{
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    int m = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_q(m, p));
        m = m % 1000 + 1;
    }
}
BENCHMARK(BM_SolveQ);

static void BM_BuildTable(benchmark::State& state)
{
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_table(static_cast<std::size_t>(state.range(0)), p));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTable)->Arg(200)->Arg(2000)->Complexity();

static void BM_FdtdStep(benchmark::State& state)
{
    const auto table = std::make_shared<const ModeTable>(build_table(10, PhysicalParams::strip(1.0, 1.0, 1.0)));
    std::vector<double> a(11, 0.0);
    std::vector<double> b(11, 0.0);
    a[1] = 1.0;
    const Grid1D g = strip_grid(table->params(), static_cast<std::size_t>(state.range(0)));
    auto s = FdtdState::from_cauchy(SpectralState(a, b, table).to_cauchy(g), table->params(), 0.5);
    for (auto _ : state) {
        s.advance();
        benchmark::DoNotOptimize(s.phi().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_FdtdStep)->Arg(512)->Arg(4096);

static void BM_SmearedCoeffs(benchmark::State& state)
{
    const auto table = build_table(60, PhysicalParams::strip(1.0, 1.0, 1.0));
    const auto f = gaussian();
    const SmearingGrid grid{-4.0, 4.0, 800, 1024};
    for (auto _ : state)
        benchmark::DoNotOptimize(smeared_coeffs(f, table, grid, std::size_t{20}));
}
BENCHMARK(BM_SmearedCoeffs)->Unit(benchmark::kMillisecond);

static void BM_HolographicDual(benchmark::State& state)
{
    const auto table = build_table(60, PhysicalParams::strip(1.0, 1.0, 1.0));
    const auto f = gaussian();
    HoloOptions opt;
    opt.smearing = SmearingGrid{-4.0, 4.0, 800, 1024};
    opt.n_t = 400;
    for (auto _ : state)
        benchmark::DoNotOptimize(holographic_dual(f, table, opt));
}
BENCHMARK(BM_HolographicDual)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
