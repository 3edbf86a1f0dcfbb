#pragma once

#include <vector>

#include "sffkit/ensembles.hpp"

namespace sffkit {

struct TimeGrid {
  EnsembleKind kind = EnsembleKind::CUE;
  int dim = 1;
  ThConvention convention = ThConvention::Default;
  HeisenbergTime heisenberg;
  std::vector<double> times;
  std::vector<double> taus;

  std::size_t size() const { return times.size(); }

  static TimeGrid from_times(EnsembleKind kind, int dim, std::vector<double> times,
                             ThConvention conv = ThConvention::Default);
  // tau_j = j * tau_max / n_times, j = 1..n_times. CUE times are rounded to
  // integers and deduplicated.
  static TimeGrid uniform(EnsembleKind kind, int dim, double tau_max, int n_times,
                          ThConvention conv = ThConvention::Default);
};

bool operator==(const TimeGrid& a, const TimeGrid& b);

}  // namespace sffkit
