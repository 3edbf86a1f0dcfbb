#include <benchmark/benchmark.h>

#include "sffkit/ensembles.hpp"
#include "sffkit/estimator.hpp"
#include "sffkit/linalg.hpp"
#include "sffkit/time_grid.hpp"

using namespace sffkit;

namespace {

std::vector<double> integer_times(int n) {
  std::vector<double> t;
  for (int k = 1; k <= n; ++k) t.push_back(k);
  return t;
}

void BM_SampleCue(benchmark::State& st) {
  const EnsembleSpec spec{EnsembleKind::CUE, static_cast<int>(st.range(0)), 1};
  std::uint64_t i = 0;
  for (auto _ : st) {
    RngStream s(1, i++);
    benchmark::DoNotOptimize(sample_cue(spec, s));
  }
}
BENCHMARK(BM_SampleCue)->Arg(5)->Arg(20)->Arg(100);

void BM_SampleGue(benchmark::State& st) {
  const EnsembleSpec spec{EnsembleKind::GUE, static_cast<int>(st.range(0)), 1};
  std::uint64_t i = 0;
  for (auto _ : st) {
    RngStream s(1, i++);
    benchmark::DoNotOptimize(sample_gue(spec, s));
  }
}
BENCHMARK(BM_SampleGue)->Arg(5)->Arg(20)->Arg(100);

void BM_UnitaryEigenphases(benchmark::State& st) {
  const EnsembleSpec spec{EnsembleKind::CUE, static_cast<int>(st.range(0)), 1};
  RngStream s(1, 0);
  const auto u = sample_cue(spec, s);
  for (auto _ : st) benchmark::DoNotOptimize(unitary_eigenphases(u));
}
BENCHMARK(BM_UnitaryEigenphases)->Arg(5)->Arg(20)->Arg(100);

void BM_HermitianEigenvalues(benchmark::State& st) {
  const EnsembleSpec spec{EnsembleKind::GUE, static_cast<int>(st.range(0)), 1};
  RngStream s(1, 0);
  const auto h = sample_gue(spec, s);
  for (auto _ : st) benchmark::DoNotOptimize(hermitian_eigenvalues(h));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(5)->Arg(20)->Arg(100);

void BM_TracePowers(benchmark::State& st) {
  const int dim = static_cast<int>(st.range(0));
  const EnsembleSpec spec{EnsembleKind::CUE, dim, 1};
  RngStream s(1, 0);
  const auto sp = spectrum_of(spec, sample_cue(spec, s));
  const auto grid = TimeGrid::from_times(EnsembleKind::CUE, dim, integer_times(3 * dim));
  for (auto _ : st) benchmark::DoNotOptimize(trace_powers(sp, grid));
}
BENCHMARK(BM_TracePowers)->Arg(10)->Arg(100);

void BM_Accumulate(benchmark::State& st) {
  const auto grid = TimeGrid::from_times(EnsembleKind::CUE, 10, integer_times(30));
  const std::uint64_t n = 1 << 20;
  MomentAccumulator acc(grid, 4, n, 50);
  std::vector<cplx> u(grid.size(), cplx(1.5, -0.5));
  std::uint64_t i = 0;
  for (auto _ : st) {
    acc.accumulate(i, u);
    if (++i == n) i = 0, acc = MomentAccumulator(grid, 4, n, 50);
  }
}
BENCHMARK(BM_Accumulate);

}  // namespace

BENCHMARK_MAIN();
