#include "sffkit/harness/runner.hpp"

#include <atomic>
#include <filesystem>
#include <mutex>
#include <thread>

#include "sffkit/error.hpp"
#include "sffkit/harness/csv.hpp"
#include "sffkit/harness/snapshot.hpp"
#include "sffkit/harness/svg.hpp"

namespace sffkit::harness {

MomentAccumulator accumulate_run(const RunConfig& cfg) {
  cfg.validate();
  const TimeGrid grid = cfg.grid();
  const int b0 = cfg.first_batch(), b1 = cfg.last_batch();
  const int workers = std::max(1, std::min(cfg.threads, b1 - b0));
  std::vector<MomentAccumulator> local(static_cast<std::size_t>(workers),
                                       MomentAccumulator(grid, cfg.n_max, cfg.n_sim, cfg.batches));
  std::atomic<int> next{b0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&](int w) {
    try {
      auto& acc = local[static_cast<std::size_t>(w)];
      for (int b = next++; b < b1; b = next++) {
        for (std::uint64_t i = acc.batch_begin(b); i < acc.batch_end(b); ++i) {
          RngStream stream(cfg.ensemble.master_seed, i);
          const auto m = sample(cfg.ensemble, stream);
          const auto u = trace_powers(spectrum_of(cfg.ensemble, m), grid);
          acc.accumulate(i, u);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = b1;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  // batches are disjoint across workers, so merging copies them unchanged
  MomentAccumulator out(grid, cfg.n_max, cfg.n_sim, cfg.batches);
  for (const auto& acc : local) out.merge(acc);
  return out;
}

SimulationResult simulate(const RunConfig& cfg) {
  auto acc = accumulate_run(cfg);
  auto table = finalize(acc, cfg.subtract);
  auto pred = predict(acc.grid());
  return {std::move(acc), std::move(table), std::move(pred)};
}

namespace {

std::vector<Panel> result_panels(const MomentTable& table, const PredictionCurve& pred) {
  const double dim = table.grid.dim;
  Panel mean{"mean SFF_c / D", "tau", "SFF_c / D", false, {}};
  Series emp{"empirical", {}, {}, {}, "#1f77b4", false, true};
  Series th{"z(tau)", {}, {}, {}, "#000000", true, false};
  for (std::size_t j = 0; j < table.rows.size(); ++j) {
    const auto& r = table.rows[j];
    emp.x.push_back(r.tau);
    emp.y.push_back(r.sffc / dim);
    emp.err.push_back(r.sffc_se / dim);
    th.x.push_back(r.tau);
    th.y.push_back(pred.z[j]);
  }
  mean.series = {emp, th};
  std::vector<Panel> out{mean};
  if (table.n_max >= 2) {
    Panel c2{"(E[SFF^2] - 2 E[SFF]^2) / D", "tau", "Conn2", false, {}};
    Series e2{"empirical", {}, {}, {}, "#d62728", false, true};
    Series t2{"z(2t) - 2 z(t)", {}, {}, {}, "#000000", true, false};
    for (std::size_t j = 0; j < table.rows.size(); ++j) {
      const auto& r = table.rows[j];
      e2.x.push_back(r.tau);
      e2.y.push_back(r.conn2);
      e2.err.push_back(r.conn2_se);
      t2.x.push_back(r.tau);
      t2.y.push_back(pred.conn2[j]);
    }
    c2.series = {e2, t2};
    out.push_back(c2);
  }
  return out;
}

}  // namespace

void write_results(const std::string& out_dir, const MomentAccumulator& acc, const MomentTable& table,
                   const PredictionCurve& pred, std::uint64_t seed, bool plot) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create output directory '" + out_dir + "'");
  const std::filesystem::path dir(out_dir);
  write_text_file((dir / "results.csv").string(), results_csv(table, pred, acc.n_sim()));
  save_snapshot((dir / "snapshot.json").string(), acc, seed);
  if (plot) write_text_file((dir / "sff.svg").string(), render_svg(result_panels(table, pred)));
}

SimulationResult run_simulate(const RunConfig& cfg) {
  auto res = simulate(cfg);
  if (!cfg.out_dir.empty()) {
    write_results(cfg.out_dir, res.acc, res.table, res.prediction, cfg.ensemble.master_seed, cfg.plot);
  }
  return res;
}

}  // namespace sffkit::harness
