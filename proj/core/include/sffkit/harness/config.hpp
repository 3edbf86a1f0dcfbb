#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sffkit/ensembles.hpp"
#include "sffkit/estimator.hpp"
#include "sffkit/time_grid.hpp"

namespace sffkit::harness {

struct RunConfig {
  EnsembleSpec ensemble{EnsembleKind::CUE, 10, 1};
  double tau_max = 3.0;
  int n_times = 30;
  std::vector<double> times;  // explicit grid, overrides tau_max / n_times
  std::uint64_t n_sim = 10000;
  int n_max = 4;
  int batches = 50;
  int threads = 1;
  SubtractMode subtract = SubtractMode::Empirical;
  ThConvention th_convention = ThConvention::Default;
  std::string out_dir;  // empty: no files written
  bool plot = false;
  // Partial run over batches [batch_begin, batch_end); -1 means all.
  int batch_begin = 0;
  int batch_end = -1;

  TimeGrid grid() const;
  int first_batch() const { return batch_begin; }
  int last_batch() const { return batch_end < 0 ? batches : batch_end; }
  // Throws Error(ErrorCode::Config) naming the offending field.
  void validate() const;
};

// key = value lines echoing the fields that define the sample set.
std::string describe(const RunConfig& cfg);

}  // namespace sffkit::harness
