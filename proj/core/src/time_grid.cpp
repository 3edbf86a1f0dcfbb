#include "sffkit/time_grid.hpp"

#include <cmath>

#include "sffkit/error.hpp"

namespace sffkit {

TimeGrid TimeGrid::from_times(EnsembleKind kind, int dim, std::vector<double> times, ThConvention conv) {
  if (times.empty()) throw Error(ErrorCode::InvalidParameter, "time grid is empty");
  for (std::size_t j = 0; j < times.size(); ++j) {
    const double t = times[j];
    if (!std::isfinite(t) || t < 0.0) throw Error(ErrorCode::InvalidParameter, "grid times must be finite and >= 0");
    if (kind == EnsembleKind::CUE && t != std::floor(t)) {
      throw Error(ErrorCode::InvalidParameter, "CUE grid times must be integers");
    }
    if (j > 0 && !(t > times[j - 1])) throw Error(ErrorCode::InvalidParameter, "grid times must be strictly ascending");
  }
  TimeGrid g;
  g.kind = kind;
  g.dim = dim;
  g.convention = conv;
  g.heisenberg = heisenberg_time(kind, dim, conv);
  g.times = std::move(times);
  g.taus.resize(g.times.size());
  for (std::size_t j = 0; j < g.times.size(); ++j) g.taus[j] = g.times[j] / g.heisenberg.value;
  return g;
}

TimeGrid TimeGrid::uniform(EnsembleKind kind, int dim, double tau_max, int n_times, ThConvention conv) {
  if (!(tau_max > 0.0)) throw Error(ErrorCode::InvalidParameter, "tau_max must be positive");
  if (n_times < 1) throw Error(ErrorCode::InvalidParameter, "n_times must be >= 1");
  const double th = heisenberg_time(kind, dim, conv).value;
  std::vector<double> times;
  for (int j = 1; j <= n_times; ++j) {
    double t = th * (tau_max * j / n_times);
    if (kind == EnsembleKind::CUE) {
      t = std::round(t);
      if (t < 1.0 || (!times.empty() && t <= times.back())) continue;
    }
    times.push_back(t);
  }
  return from_times(kind, dim, std::move(times), conv);
}

bool operator==(const TimeGrid& a, const TimeGrid& b) {
  return a.kind == b.kind && a.dim == b.dim && a.convention == b.convention && a.times == b.times;
}

}  // namespace sffkit
