#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sffkit/ensembles.hpp"
#include "sffkit/error.hpp"
#include "sffkit/estimator.hpp"
#include "sffkit/time_grid.hpp"

using namespace sffkit;

namespace {

Spectrum phases(std::vector<double> v) { return {SpectrumKind::CuePhases, std::move(v)}; }

MomentAccumulator run_cue(int dim, std::uint64_t n, int batches, std::vector<double> times, std::uint64_t seed,
                          std::uint64_t from = 0, std::uint64_t to = ~0ull) {
  const EnsembleSpec spec{EnsembleKind::CUE, dim, seed};
  const auto grid = TimeGrid::from_times(EnsembleKind::CUE, dim, std::move(times));
  MomentAccumulator acc(grid, 4, n, batches);
  for (std::uint64_t i = from; i < std::min(n, to); ++i) {
    RngStream s(seed, i);
    acc.accumulate(i, trace_powers(spectrum_of(spec, sample(spec, s)), grid));
  }
  return acc;
}

}  // namespace

TEST(TimeGrid, UniformCueRoundsAndDedups) {
  // times that round to 0 are dropped
  const auto g = TimeGrid::uniform(EnsembleKind::CUE, 4, 1.0, 10);
  EXPECT_EQ(g.times, (std::vector<double>{1, 2, 3, 4}));
  EXPECT_EQ(g.taus.back(), 1.0);
}

TEST(TimeGrid, GueTausScaleWithHeisenbergTime) {
  const auto g = TimeGrid::uniform(EnsembleKind::GUE, 10, 2.0, 4);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_NEAR(g.times[3], 2.0 * 5 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(g.taus[0], 0.5, 1e-15);
}

TEST(TimeGrid, RejectsBadTimes) {
  EXPECT_THROW(TimeGrid::from_times(EnsembleKind::CUE, 4, {1.5}), Error);
  EXPECT_THROW(TimeGrid::from_times(EnsembleKind::GUE, 4, {2.0, 1.0}), Error);
  EXPECT_THROW(TimeGrid::from_times(EnsembleKind::GUE, 4, {}), Error);
  EXPECT_THROW(TimeGrid::uniform(EnsembleKind::GUE, 4, -1.0, 3), Error);
}

TEST(TracePowers, SinglePhaseHasUnitModulus) {
  const auto g = TimeGrid::from_times(EnsembleKind::CUE, 1, {0, 1, 5, 17});
  for (auto u : trace_powers(phases({0.731}), g)) EXPECT_NEAR(std::norm(u), 1.0, 1e-14);
}

TEST(TracePowers, TimeZeroIsDimension) {
  const auto g = TimeGrid::from_times(EnsembleKind::CUE, 3, {0});
  EXPECT_EQ(trace_powers(phases({0.1, 0.2, -1.0}), g)[0], cplx(3.0));
}

TEST(TracePowers, OppositePhasesCancel) {
  const auto g = TimeGrid::from_times(EnsembleKind::CUE, 2, {1});
  EXPECT_LT(std::abs(trace_powers(phases({0.0, std::numbers::pi}), g)[0]), 1e-15);
}

TEST(TracePowers, KindMismatchThrows) {
  const auto g = TimeGrid::from_times(EnsembleKind::GUE, 2, {1.0});
  EXPECT_THROW(trace_powers(phases({0.0, 1.0}), g), Error);
}

TEST(PairwiseSum, MatchesLongDoubleSum) {
  PairwiseSum ps(1);
  long double exact = 0;
  for (int i = 0; i < 100001; ++i) {
    const double x = 1.0 / (1.0 + i) + 1e8 * (i % 3 == 0);
    ps.push(&x);
    exact += x;
  }
  EXPECT_NEAR(ps.result()[0], static_cast<double>(exact), 1e-12 * static_cast<double>(exact));
}

TEST(Accumulator, SingleSamplePowers) {
  const auto g = TimeGrid::from_times(EnsembleKind::CUE, 2, {1});
  MomentAccumulator acc(g, 4, 2, 2);
  const std::vector<cplx> u{{1.5, 0.5}};
  acc.accumulate(0, u);
  const double x = std::norm(u[0]);
  const auto s = acc.total_sums();
  EXPECT_EQ(s[0], x);
  EXPECT_EQ(s[3], x * x * x * x);
  EXPECT_EQ(s[4], 1.5);
  EXPECT_EQ(s[5], 0.5);
  EXPECT_EQ(acc.count(), 1u);
}

TEST(Accumulator, BatchAssignment) {
  const auto g = TimeGrid::from_times(EnsembleKind::CUE, 2, {1});
  MomentAccumulator acc(g, 1, 10, 3);
  EXPECT_EQ(acc.batch_of(0), 0);
  EXPECT_EQ(acc.batch_of(3), 0);
  EXPECT_EQ(acc.batch_of(4), 1);
  EXPECT_EQ(acc.batch_of(9), 2);
  EXPECT_EQ(acc.batch_begin(1), 4u);
  EXPECT_EQ(acc.batch_end(2), 10u);
  EXPECT_THROW(MomentAccumulator(g, 5, 10, 3), Error);
  EXPECT_THROW(MomentAccumulator(g, 1, 10, 11), Error);
}

TEST(Accumulator, MergeOfHalvesEqualsOnePass) {
  const std::vector<double> t{1, 3, 7, 12};
  const auto whole = run_cue(6, 10, 2, t, 5);
  auto a = run_cue(6, 10, 2, t, 5, 0, 5);
  const auto b = run_cue(6, 10, 2, t, 5, 5, 10);
  a.merge(b);
  const auto x = whole.total_sums(), y = a.total_sums();
  for (std::size_t k = 0; k < x.size(); ++k) EXPECT_NEAR(x[k], y[k], 1e-12 * std::abs(x[k]));
}

TEST(Accumulator, MergeWithinBatchAndOrderIndependence) {
  const std::vector<double> t{2, 4};
  const auto whole = run_cue(5, 40, 4, t, 9);
  auto a = run_cue(5, 40, 4, t, 9, 0, 13);
  auto b = run_cue(5, 40, 4, t, 9, 13, 40);
  auto ab = a;
  ab.merge(b);
  b.merge(a);
  const auto x = whole.total_sums(), y = ab.total_sums(), z = b.total_sums();
  for (std::size_t k = 0; k < x.size(); ++k) {
    EXPECT_NEAR(x[k], y[k], 1e-12 * std::abs(x[k]));
    EXPECT_NEAR(y[k], z[k], 1e-12 * std::abs(x[k]));
  }
}

TEST(Accumulator, MergeRejectsMismatch) {
  auto a = run_cue(4, 10, 2, {1}, 1);
  const auto b = run_cue(4, 10, 2, {2}, 1);
  EXPECT_THROW(a.merge(b), Error);
}

TEST(Accumulator, RejectsBadInput) {
  const auto g = TimeGrid::from_times(EnsembleKind::CUE, 2, {1, 2});
  MomentAccumulator acc(g, 2, 4, 2);
  const std::vector<cplx> one{1.0};
  const std::vector<cplx> two{1.0, 2.0};
  EXPECT_THROW(acc.accumulate(0, one), Error);
  EXPECT_THROW(acc.accumulate(4, two), Error);
}

TEST(Finalize, StandardErrorsMatchTwoPassOracle) {
  const auto acc = run_cue(8, 2000, 20, {1, 4, 9}, 3);
  const auto tab = finalize(acc, SubtractMode::Empirical);
  const std::size_t st = acc.stride();
  for (std::size_t j = 0; j < 3; ++j) {
    for (int k = 0; k < 4; ++k) {
      std::vector<double> means;
      for (int b = 0; b < acc.batches(); ++b)
        means.push_back(acc.batch_sums(b)[j * st + k] / acc.batch_count(b));
      const auto ref = oracle::two_pass_batch_se(means);
      EXPECT_NEAR(tab.rows[j].se[k], ref.se, 1e-12 * ref.se);
      EXPECT_NEAR(tab.rows[j].mean[k], ref.mean, 1e-12 * ref.mean);
    }
  }
}

TEST(Finalize, NeedsTwoBatches) {
  const auto acc = run_cue(4, 10, 5, {1}, 1, 0, 2);
  EXPECT_THROW(finalize(acc, SubtractMode::Empirical), Error);
}

TEST(Finalize, AnalyticSubtractionUsesZeroForCue) {
  const auto acc = run_cue(4, 100, 4, {0, 3}, 1);
  const auto tab = finalize(acc, SubtractMode::Analytic);
  EXPECT_EQ(tab.rows[0].ubar_used, cplx(4.0));
  EXPECT_NEAR(tab.rows[0].sffc, 0.0, 1e-12);
  EXPECT_EQ(tab.rows[1].ubar_used, cplx(0.0));
  EXPECT_EQ(tab.rows[1].sffc, tab.rows[1].mean[0]);
}

TEST(Finalize, CueRampD20) {
  const auto acc = run_cue(20, 100000, 50, {8}, 21);
  const auto r = finalize(acc, SubtractMode::Empirical).rows[0];
  EXPECT_LT(std::abs(r.mean[0] / 20 - 0.4), 5 * r.se[0] / 20);
}

TEST(Finalize, CuePlateauD10) {
  const auto acc = run_cue(10, 20000, 50, {10, 15, 25}, 22);
  for (const auto& r : finalize(acc, SubtractMode::Empirical).rows) EXPECT_LT(std::abs(r.mean[0] - 10), 5 * r.se[0]);
}
