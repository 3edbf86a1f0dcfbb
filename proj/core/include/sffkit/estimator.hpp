#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "sffkit/linalg.hpp"
#include "sffkit/time_grid.hpp"

namespace sffkit {

std::vector<cplx> trace_powers(const Spectrum& spectrum, const TimeGrid& grid);

// Streaming pairwise (binary cascade) summation of fixed-width rows.
class PairwiseSum {
 public:
  explicit PairwiseSum(std::size_t width = 0) : width_(width) {}
  std::size_t width() const { return width_; }
  bool empty() const { return levels_.empty(); }
  void push(const double* row);
  std::vector<double> result() const;

 private:
  std::size_t width_;
  std::vector<std::vector<double>> levels_;
  std::vector<bool> full_;
};

enum class SubtractMode { Empirical, Analytic };

const char* to_string(SubtractMode mode);
SubtractMode parse_subtract(const std::string& s);

// Per-batch sums; row layout per time j: [SFF^1 .. SFF^n_max, Re u, Im u].
struct BatchSums {
  std::uint64_t count = 0;
  std::vector<double> sums;
};

class MomentAccumulator {
 public:
  MomentAccumulator(TimeGrid grid, int n_max, std::uint64_t n_sim, int batches);

  const TimeGrid& grid() const { return grid_; }
  int n_max() const { return n_max_; }
  std::uint64_t n_sim() const { return n_sim_; }
  int batches() const { return batches_; }
  std::size_t row_width() const { return grid_.size() * stride(); }
  std::size_t stride() const { return static_cast<std::size_t>(n_max_) + 2; }

  int batch_of(std::uint64_t sample_index) const;
  std::uint64_t batch_begin(int b) const;
  std::uint64_t batch_end(int b) const { return batch_begin(b + 1); }

  void accumulate(std::uint64_t sample_index, std::span<const cplx> u);
  void merge(const MomentAccumulator& other);

  std::uint64_t count() const;
  std::uint64_t batch_count(int b) const;
  // Batch sums in row layout (empty vector when the batch has no samples).
  std::vector<double> batch_sums(int b) const;
  // Totals merged in ascending batch order.
  std::vector<double> total_sums() const;

  // Replace batch b with externally stored sums (snapshot load).
  void set_batch(int b, std::uint64_t count, std::vector<double> sums);

 private:
  struct Batch {
    std::uint64_t count = 0;
    std::vector<double> base;
    PairwiseSum cascade;
  };

  TimeGrid grid_;
  int n_max_;
  std::uint64_t n_sim_;
  int batches_;
  std::vector<Batch> batch_;
  std::vector<double> scratch_;
};

struct MomentRow {
  double t = 0.0;
  double tau = 0.0;
  std::vector<double> mean;  // mean SFF^k, k = 1..n_max
  std::vector<double> se;
  cplx mean_u;
  cplx ubar_used;
  double sffc = 0.0;
  double sffc_se = 0.0;
  double var = 0.0;
  double var_se = 0.0;
  double var_ratio = 0.0;  // Var(SFF) / mean(SFF)^2
  double var_ratio_se = 0.0;
  double conn2 = 0.0;  // (mean SFF^2 - 2 mean SFF_c^2) / D
  double conn2_se = 0.0;
};

struct MomentTable {
  TimeGrid grid;
  int n_max = 4;
  std::uint64_t count = 0;
  int batches = 0;
  SubtractMode subtract = SubtractMode::Empirical;
  std::vector<MomentRow> rows;
};

MomentTable finalize(const MomentAccumulator& acc, SubtractMode subtract);

}  // namespace sffkit
