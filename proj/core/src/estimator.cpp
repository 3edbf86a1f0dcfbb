#include "sffkit/estimator.hpp"

#include <cmath>
#include <limits>

#include "sffkit/analytics.hpp"
#include "sffkit/error.hpp"

namespace sffkit {

std::vector<cplx> trace_powers(const Spectrum& spectrum, const TimeGrid& grid) {
  const bool cue = spectrum.kind == SpectrumKind::CuePhases;
  if (cue != (grid.kind == EnsembleKind::CUE)) {
    throw Error(ErrorCode::InvalidInput, "trace_powers: spectrum kind does not match grid kind");
  }
  std::vector<cplx> u(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid.times[j];
    double re = 0.0, im = 0.0;
    for (double lam : spectrum.values) {
      re += std::cos(lam * t);
      im += std::sin(lam * t);
    }
    u[j] = {re, im};
  }
  return u;
}

void PairwiseSum::push(const double* row) {
  std::vector<double> carry(row, row + width_);
  for (std::size_t lvl = 0;; ++lvl) {
    if (lvl == levels_.size()) {
      levels_.push_back(std::move(carry));
      full_.push_back(true);
      return;
    }
    if (!full_[lvl]) {
      levels_[lvl].swap(carry);
      full_[lvl] = true;
      return;
    }
    const auto& l = levels_[lvl];
    for (std::size_t k = 0; k < width_; ++k) carry[k] = l[k] + carry[k];
    full_[lvl] = false;
  }
}

std::vector<double> PairwiseSum::result() const {
  std::vector<double> acc(width_, 0.0);
  for (std::size_t lvl = 0; lvl < levels_.size(); ++lvl) {
    if (!full_[lvl]) continue;
    for (std::size_t k = 0; k < width_; ++k) acc[k] += levels_[lvl][k];
  }
  return acc;
}

const char* to_string(SubtractMode mode) { return mode == SubtractMode::Empirical ? "empirical" : "analytic"; }

SubtractMode parse_subtract(const std::string& s) {
  if (s == "empirical") return SubtractMode::Empirical;
  if (s == "analytic") return SubtractMode::Analytic;
  throw Error(ErrorCode::Config, "unknown subtract mode '" + s + "' (expected empirical or analytic)");
}

MomentAccumulator::MomentAccumulator(TimeGrid grid, int n_max, std::uint64_t n_sim, int batches)
    : grid_(std::move(grid)), n_max_(n_max), n_sim_(n_sim), batches_(batches) {
  if (n_max < 1 || n_max > 4) throw Error(ErrorCode::InvalidParameter, "n_max must be in 1..4");
  if (n_sim < 1) throw Error(ErrorCode::InvalidParameter, "n_sim must be >= 1");
  if (batches < 1 || static_cast<std::uint64_t>(batches) > n_sim) {
    throw Error(ErrorCode::InvalidParameter, "batch count must be in 1..n_sim");
  }
  batch_.resize(static_cast<std::size_t>(batches));
  for (auto& b : batch_) b.cascade = PairwiseSum(row_width());
  scratch_.resize(row_width());
}

int MomentAccumulator::batch_of(std::uint64_t i) const {
  return static_cast<int>(i * static_cast<std::uint64_t>(batches_) / n_sim_);
}

std::uint64_t MomentAccumulator::batch_begin(int b) const {
  const auto bb = static_cast<std::uint64_t>(b);
  const auto nb = static_cast<std::uint64_t>(batches_);
  return (bb * n_sim_ + nb - 1) / nb;
}

void MomentAccumulator::accumulate(std::uint64_t sample_index, std::span<const cplx> u) {
  if (u.size() != grid_.size()) throw Error(ErrorCode::InvalidInput, "accumulate: series length does not match grid");
  if (sample_index >= n_sim_) throw Error(ErrorCode::InvalidInput, "accumulate: sample index beyond n_sim");
  const std::size_t st = stride();
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double s = std::norm(u[j]);
    double p = s;
    double* r = scratch_.data() + j * st;
    for (int k = 0; k < n_max_; ++k) {
      r[k] = p;
      p *= s;
    }
    r[n_max_] = u[j].real();
    r[n_max_ + 1] = u[j].imag();
  }
  auto& b = batch_[static_cast<std::size_t>(batch_of(sample_index))];
  b.cascade.push(scratch_.data());
  ++b.count;
}

std::vector<double> MomentAccumulator::batch_sums(int b) const {
  const auto& bt = batch_.at(static_cast<std::size_t>(b));
  if (bt.count == 0) return {};
  if (bt.cascade.empty()) return bt.base;
  auto r = bt.cascade.result();
  if (!bt.base.empty())
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = bt.base[k] + r[k];
  return r;
}

std::uint64_t MomentAccumulator::batch_count(int b) const { return batch_.at(static_cast<std::size_t>(b)).count; }

std::uint64_t MomentAccumulator::count() const {
  std::uint64_t c = 0;
  for (const auto& b : batch_) c += b.count;
  return c;
}

std::vector<double> MomentAccumulator::total_sums() const {
  std::vector<double> tot(row_width(), 0.0);
  for (int b = 0; b < batches_; ++b) {
    const auto s = batch_sums(b);
    if (s.empty()) continue;
    for (std::size_t k = 0; k < tot.size(); ++k) tot[k] += s[k];
  }
  return tot;
}

void MomentAccumulator::set_batch(int b, std::uint64_t count, std::vector<double> sums) {
  if (b < 0 || b >= batches_) throw Error(ErrorCode::InvalidInput, "set_batch: batch index out of range");
  if (count > 0 && sums.size() != row_width()) throw Error(ErrorCode::InvalidInput, "set_batch: wrong row width");
  auto& bt = batch_[static_cast<std::size_t>(b)];
  bt.count = count;
  bt.base = count > 0 ? std::move(sums) : std::vector<double>{};
  bt.cascade = PairwiseSum(row_width());
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (!(grid_ == other.grid_) || n_max_ != other.n_max_ || n_sim_ != other.n_sim_ || batches_ != other.batches_) {
    throw Error(ErrorCode::InvalidInput, "merge: accumulator configurations differ");
  }
  for (std::size_t b = 0; b < batch_.size(); ++b) {
    const auto& ob = other.batch_[b];
    if (ob.count == 0) continue;
    auto& mb = batch_[b];
    if (mb.count == 0) {
      mb = ob;
      continue;
    }
    auto a = batch_sums(static_cast<int>(b));
    const auto o = other.batch_sums(static_cast<int>(b));
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += o[k];
    mb.count += ob.count;
    mb.base = std::move(a);
    mb.cascade = PairwiseSum(row_width());
  }
}

namespace {

struct SpreadStat {
  std::vector<double> values;
  void add(double x) { values.push_back(x); }
  // stddev (n-1) of the batch values over sqrt(n)
  double se() const {
    const int m = static_cast<int>(values.size());
    if (m < 2) return std::numeric_limits<double>::quiet_NaN();
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= m;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / (m - 1)) / std::sqrt(static_cast<double>(m));
  }
};

}  // namespace

MomentTable finalize(const MomentAccumulator& acc, SubtractMode subtract) {
  std::vector<int> live;
  for (int b = 0; b < acc.batches(); ++b)
    if (acc.batch_count(b) > 0) live.push_back(b);
  if (live.size() < 2) throw Error(ErrorCode::InsufficientData, "finalize: fewer than 2 non-empty batches");

  const auto& grid = acc.grid();
  const int nm = acc.n_max();
  const std::size_t st = acc.stride();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double dim = grid.dim;
  const auto total = acc.total_sums();
  const double count = static_cast<double>(acc.count());

  std::vector<std::vector<double>> bsums;
  std::vector<double> bcount;
  for (int b : live) {
    bsums.push_back(acc.batch_sums(b));
    bcount.push_back(static_cast<double>(acc.batch_count(b)));
  }

  MomentTable tab;
  tab.grid = grid;
  tab.n_max = nm;
  tab.count = acc.count();
  tab.batches = static_cast<int>(live.size());
  tab.subtract = subtract;
  tab.rows.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    MomentRow& row = tab.rows[j];
    row.t = grid.times[j];
    row.tau = grid.taus[j];
    const double* tj = total.data() + j * st;
    row.mean.resize(nm);
    row.se.resize(nm);
    for (int k = 0; k < nm; ++k) row.mean[k] = tj[k] / count;
    row.mean_u = {tj[nm] / count, tj[nm + 1] / count};
    row.ubar_used = subtract == SubtractMode::Empirical ? row.mean_u : ubar(grid.kind, row.t, grid.dim);
    const double u2 = std::norm(row.ubar_used);
    const double m1 = row.mean[0];
    row.sffc = m1 - u2;
    row.var = nm >= 2 ? row.mean[1] - m1 * m1 : nan;
    row.var_ratio = nm >= 2 ? row.var / (m1 * m1) : nan;
    row.conn2 = nm >= 2 ? (row.mean[1] - 2.0 * row.sffc * row.sffc) / dim : nan;

    std::vector<SpreadStat> mom(static_cast<std::size_t>(nm));
    SpreadStat var, ratio, c2;
    for (std::size_t b = 0; b < bsums.size(); ++b) {
      const double* s = bsums[b].data() + j * st;
      const double n = bcount[b];
      for (int k = 0; k < nm; ++k) mom[static_cast<std::size_t>(k)].add(s[k] / n);
      if (nm >= 2) {
        const double b1 = s[0] / n, b2 = s[1] / n;
        const double bc = b1 - u2;
        var.add(b2 - b1 * b1);
        ratio.add((b2 - b1 * b1) / (b1 * b1));
        c2.add((b2 - 2.0 * bc * bc) / dim);
      }
    }
    for (int k = 0; k < nm; ++k) row.se[k] = mom[static_cast<std::size_t>(k)].se();
    row.sffc_se = row.se[0];
    row.var_se = nm >= 2 ? var.se() : nan;
    row.var_ratio_se = nm >= 2 ? ratio.se() : nan;
    row.conn2_se = nm >= 2 ? c2.se() : nan;
  }
  return tab;
}

}  // namespace sffkit
