#include "sffkit/harness/config.hpp"

#include <cmath>
#include <sstream>

#include "sffkit/error.hpp"
#include "sffkit/harness/csv.hpp"

namespace sffkit::harness {

TimeGrid RunConfig::grid() const {
  if (!times.empty()) return TimeGrid::from_times(ensemble.kind, ensemble.dim, times, th_convention);
  return TimeGrid::uniform(ensemble.kind, ensemble.dim, tau_max, n_times, th_convention);
}

void RunConfig::validate() const {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::Config, m); };
  if (ensemble.dim < 1) fail("dim must be >= 1");
  if (n_sim < 1) fail("nsim must be >= 1");
  if (batches < 2) fail("batches must be >= 2");
  if (static_cast<std::uint64_t>(batches) > n_sim) fail("nsim must be >= batches");
  if (n_max < 1 || n_max > 4) fail("nmax must be in 1..4");
  if (threads < 1) fail("threads must be >= 1");
  if (times.empty()) {
    if (!(tau_max > 0.0) || !std::isfinite(tau_max)) fail("tau-max must be positive");
    if (n_times < 1) fail("ntimes must be >= 1");
  } else if (ensemble.kind == EnsembleKind::CUE) {
    for (double t : times)
      if (t != std::floor(t) || t < 0) fail("CUE grid times must be non-negative integers");
  }
  if (batch_begin < 0 || batch_begin >= batches) fail("batch-begin out of range");
  if (batch_end >= 0 && (batch_end <= batch_begin || batch_end > batches)) fail("batch-end out of range");
  if (last_batch() - first_batch() < 2) fail("a run must cover at least 2 batches");
  try {
    (void)grid();
  } catch (const Error& e) {
    fail(std::string("time grid: ") + e.what());
  }
}

std::string describe(const RunConfig& cfg) {
  std::ostringstream os;
  os << "ensemble = " << to_string(cfg.ensemble.kind) << "\n"
     << "dim = " << cfg.ensemble.dim << "\n"
     << "seed = " << cfg.ensemble.master_seed << "\n"
     << "nsim = " << cfg.n_sim << "\n"
     << "nmax = " << cfg.n_max << "\n"
     << "batches = " << cfg.batches << "\n"
     << "subtract = " << to_string(cfg.subtract) << "\n"
     << "th-convention = " << to_string(cfg.th_convention) << "\n";
  const auto g = cfg.grid();
  os << "times =";
  for (double t : g.times) os << " " << format_double(t);
  os << "\n";
  return os.str();
}

}  // namespace sffkit::harness
