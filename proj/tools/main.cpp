#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sffkit/error.hpp"
#include "sffkit/harness/config.hpp"
#include "sffkit/harness/csv.hpp"
#include "sffkit/harness/figures.hpp"
#include "sffkit/harness/runner.hpp"
#include "sffkit/harness/snapshot.hpp"
#include "sffkit/harness/verify.hpp"

namespace {

using namespace sffkit;
using namespace sffkit::harness;

constexpr int kExitConfig = 2;
constexpr int kExitVerify = 3;
constexpr int kExitIo = 4;

const std::vector<std::string> kRunKeys = {"ensemble", "dim",     "nsim",    "seed",     "tau-max",
                                           "ntimes",   "times",   "nmax",    "batches",  "threads",
                                           "subtract", "th-convention", "out", "batch-begin", "batch-end"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream is(value);
  T x{};
  if (!(is >> x) || !(is >> std::ws).eof()) throw Error(ErrorCode::Config, key + ": cannot parse '" + value + "'");
  return x;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw Error(ErrorCode::Config, key + ": expected a boolean, got '" + value + "'");
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
  try {
    if (key == "ensemble") cfg.ensemble.kind = parse_ensemble(value);
    else if (key == "dim") cfg.ensemble.dim = parse_number<int>(key, value);
    else if (key == "nsim") cfg.n_sim = static_cast<std::uint64_t>(parse_number<double>(key, value));
    else if (key == "seed") cfg.ensemble.master_seed = parse_number<std::uint64_t>(key, value);
    else if (key == "tau-max") cfg.tau_max = parse_number<double>(key, value);
    else if (key == "ntimes") cfg.n_times = parse_number<int>(key, value);
    else if (key == "times") {
      std::string list = value;
      for (char& ch : list)
        if (ch == ',') ch = ' ';
      std::istringstream is(list);
      cfg.times.clear();
      for (std::string tok; is >> tok;) cfg.times.push_back(parse_number<double>(key, tok));
    } else if (key == "nmax") cfg.n_max = parse_number<int>(key, value);
    else if (key == "batches") cfg.batches = parse_number<int>(key, value);
    else if (key == "threads") cfg.threads = parse_number<int>(key, value);
    else if (key == "subtract") cfg.subtract = parse_subtract(value);
    else if (key == "th-convention") cfg.th_convention = parse_th_convention(value);
    else if (key == "out") cfg.out_dir = value;
    else if (key == "plot") cfg.plot = parse_bool(key, value);
    else if (key == "batch-begin") cfg.batch_begin = parse_number<int>(key, value);
    else if (key == "batch-end") cfg.batch_end = parse_number<int>(key, value);
    else throw Error(ErrorCode::Config, "unknown key '" + key + "'");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Config) throw;
    throw Error(ErrorCode::Config, key + ": " + e.what());
  }
}

// key = value lines; '#' comments and [section] headers are ignored.
void apply_file(RunConfig& cfg, const std::string& path) {
  std::istringstream in(read_text_file(path));
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::Config, path + ":" + std::to_string(line_no) + ": expected key = value");
    apply(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

struct RunFlags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config;
  bool plot = false;
  CLI::Option* plot_opt = nullptr;

  void add(CLI::App* app, bool with_plot) {
    for (const auto& key : kRunKeys) options[key] = app->add_option("--" + key, values[key]);
    options["ensemble"]->description("cue|gue");
    options["subtract"]->description("empirical|analytic");
    options["th-convention"]->description("default|2d");
    options["times"]->description("explicit grid, comma separated");
    options["batch-begin"]->description("first batch of a partial run");
    options["batch-end"]->description("one past the last batch of a partial run");
    app->add_option("--config", config, "key = value file; flags win")->check(CLI::ExistingFile);
    if (with_plot) plot_opt = app->add_flag("--plot", plot, "write an SVG next to the CSV");
  }

  RunConfig build() const {
    RunConfig cfg;
    if (!config.empty()) apply_file(cfg, config);
    for (const auto& [key, opt] : options)
      if (opt->count() > 0) apply(cfg, key, values.at(key));
    if (plot_opt && plot_opt->count() > 0) cfg.plot = plot;
    return cfg;
  }
};

int cmd_simulate(const RunFlags& flags) {
  const auto cfg = flags.build();
  cfg.validate();
  const auto res = run_simulate(cfg);
  if (cfg.out_dir.empty()) std::cout << results_csv(res.table, res.prediction, cfg.n_sim);
  else std::cerr << "wrote results to " << cfg.out_dir << "\n";
  return 0;
}

int cmd_predict(const RunFlags& flags) {
  const auto cfg = flags.build();
  cfg.validate();
  const auto text = predictions_csv(predict(cfg.grid()), static_cast<double>(cfg.n_sim));
  if (cfg.out_dir.empty()) {
    std::cout << text;
  } else {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create output directory '" + cfg.out_dir + "'");
    write_text_file((std::filesystem::path(cfg.out_dir) / "predictions.csv").string(), text);
  }
  return 0;
}

int cmd_verify(const std::string& suite) {
  const auto rep = run_verify(suite);
  std::cout << rep.format();
  return rep.passed() ? 0 : kExitVerify;
}

int cmd_merge(const std::vector<std::string>& paths, const std::string& out, const std::string& subtract, bool plot) {
  std::vector<Snapshot> parts;
  for (const auto& p : paths) parts.push_back(load_snapshot(p));
  const auto merged = merge_snapshots(parts);
  const auto table = finalize(merged.acc, parse_subtract(subtract));
  const auto pred = predict(merged.acc.grid());
  if (out.empty()) {
    std::cout << results_csv(table, pred, merged.acc.n_sim());
  } else {
    write_results(out, merged.acc, table, pred, merged.seed, plot);
    std::cerr << "merged " << paths.size() << " snapshots into " << out << "\n";
  }
  return 0;
}

int cmd_figure(const FigureOptions& opt) {
  const auto rep = reproduce_figure(opt);
  for (const auto& n : rep.notes) std::cout << n << "\n";
  for (const auto& f : rep.files) std::cout << "wrote " << f << "\n";
  std::cout << (rep.consistent ? "consistent with predictions" : "INCONSISTENT with predictions") << "\n";
  return rep.consistent ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo moments of the spectral form factor for CUE and GUE"};
  app.require_subcommand(1);

  RunFlags sim_flags, pred_flags;
  auto* sim = app.add_subcommand("simulate", "sample an ensemble and write moment estimates");
  sim_flags.add(sim, true);
  auto* pred = app.add_subcommand("predict", "write closed-form predictions on a grid");
  pred_flags.add(pred, false);

  std::string suite;
  auto* ver = app.add_subcommand("verify", "run a deterministic verification suite");
  ver->add_option("suite", suite, "saddles|kernel|scba|identities")->required();

  FigureOptions fig;
  std::string scale = "desk";
  auto* rep = app.add_subcommand("reproduce-figure", "rerun the experiment behind a figure");
  rep->add_option("id", fig.id, "1|2|3|4|8")->required();
  rep->add_option("--scale", scale, "desk|full")->check(CLI::IsMember({"desk", "full"}));
  rep->add_option("--nsim", fig.nsim_cap, "cap on samples per run");
  rep->add_option("--seed", fig.seed);
  rep->add_option("--threads", fig.threads)->check(CLI::PositiveNumber);
  rep->add_option("--out", fig.out_dir);

  std::vector<std::string> snaps;
  std::string merge_out, merge_subtract = "empirical";
  bool merge_plot = false;
  auto* mer = app.add_subcommand("merge", "combine accumulator snapshots from partial runs");
  mer->add_option("snapshots", snaps)->required()->check(CLI::ExistingFile);
  mer->add_option("--out", merge_out);
  mer->add_option("--subtract", merge_subtract, "empirical|analytic");
  mer->add_flag("--plot", merge_plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (sim->parsed()) return cmd_simulate(sim_flags);
    if (pred->parsed()) return cmd_predict(pred_flags);
    if (ver->parsed()) return cmd_verify(suite);
    if (mer->parsed()) return cmd_merge(snaps, merge_out, merge_subtract, merge_plot);
    if (rep->parsed()) {
      fig.scale = scale == "full" ? Scale::Full : Scale::Desk;
      return cmd_figure(fig);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::Io: return kExitIo;
      case ErrorCode::Config:
      case ErrorCode::InvalidParameter:
      case ErrorCode::InvalidInput: return kExitConfig;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
