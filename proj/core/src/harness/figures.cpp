#include "sffkit/harness/figures.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "sffkit/error.hpp"
#include "sffkit/harness/csv.hpp"
#include "sffkit/harness/runner.hpp"
#include "sffkit/harness/svg.hpp"

namespace sffkit::harness {
namespace {

const char* kPalette[] = {"#fdae6b", "#e6550d", "#a63603", "#6baed6", "#2171b5", "#08306b"};

struct Ctx {
  const FigureOptions& opt;
  FigureReport& rep;
  std::filesystem::path dir;

  std::uint64_t nsim(std::uint64_t desk, std::uint64_t full) const {
    std::uint64_t n = opt.scale == Scale::Full ? full : desk;
    if (opt.nsim_cap > 0) n = std::min(n, opt.nsim_cap);
    return n;
  }

  SimulationResult run(EnsembleKind kind, int dim, std::uint64_t n, std::vector<double> times, double tau_max,
                       int n_times, const std::string& tag) {
    RunConfig cfg;
    cfg.ensemble = {kind, dim, opt.seed};
    cfg.times = std::move(times);
    cfg.tau_max = tau_max;
    cfg.n_times = n_times;
    cfg.n_sim = n;
    cfg.batches = static_cast<int>(std::min<std::uint64_t>(50, n));
    cfg.threads = opt.threads;
    auto res = simulate(cfg);
    const auto path = dir / (tag + ".csv");
    write_text_file(path.string(), results_csv(res.table, res.prediction, n));
    rep.files.push_back(path.string());
    return res;
  }

  void svg(int id, const std::vector<Panel>& panels, int columns) {
    const auto path = dir / ("fig" + std::to_string(id) + ".svg");
    write_text_file(path.string(), render_svg(panels, columns));
    rep.files.push_back(path.string());
  }

  void check(bool ok, const std::string& what) {
    if (!ok) {
      rep.consistent = false;
      rep.notes.push_back("outside 5 SE: " + what);
    }
  }
};

std::vector<double> integer_times(int t_max) {
  std::vector<double> t;
  for (int k = 1; k <= t_max; ++k) t.push_back(k);
  return t;
}

Series points(const std::string& label, const char* color) { return {label, {}, {}, {}, color, false, true}; }
Series curve(const std::string& label) { return {label, {}, {}, {}, "#000000", true, false}; }

void figure1(Ctx& c) {
  const int dim = 20;
  const auto n = c.nsim(200000, 20000000);
  c.rep.notes.push_back("CUE D=20, N_sim=" + std::to_string(n) + " (full scale: 2e7)");
  auto r = c.run(EnsembleKind::CUE, dim, n, integer_times(2 * dim), 0, 0, "fig1_cue_D20");
  Panel a{"CUE D=20: mean SFF and Var(SFF)", "tau", "/ D^2", true, {}};
  Panel b{"inset: |E[SFF^2] - 2 E[SFF]^2| / D", "tau", "", false, {}};
  auto m = points("mean SFF / D^2", kPalette[1]), v = points("Var(SFF) / D^2", kPalette[4]);
  auto zc = curve("z / D"), dev = points("empirical", kPalette[2]), pd = curve("|z(2t) - 2z(t)|");
  for (std::size_t j = 0; j < r.table.rows.size(); ++j) {
    const auto& row = r.table.rows[j];
    const double d2 = double(dim) * dim;
    m.x.push_back(row.tau), m.y.push_back(row.mean[0] / d2);
    v.x.push_back(row.tau), v.y.push_back(row.var / d2);
    zc.x.push_back(row.tau), zc.y.push_back(r.prediction.z[j] / dim);
    dev.x.push_back(row.tau), dev.y.push_back(std::abs(row.conn2)), dev.err.push_back(row.conn2_se);
    pd.x.push_back(row.tau), pd.y.push_back(std::abs(r.prediction.conn2[j]));
    c.check(std::abs(row.mean[0] - dim * r.prediction.z[j]) <= 5 * row.se[0], "fig1 mean at t=" + format_double(row.t));
  }
  a.series = {m, v, zc};
  b.series = {dev, pd};
  c.svg(1, {a, b}, 2);
}

void figure2(Ctx& c) {
  Panel pa{"(a) CUE: E[SFF^2] / D^2", "tau", "", false, {}}, pb{"(b) GUE: E[SFF^2] / D^2", "tau", "", false, {}};
  Panel pc{"(c) CUE: 2z(t) - z(2t)", "tau", "", false, {}}, pd{"(d) GUE: 2z(t) - z(2t)", "tau", "", false, {}};
  const std::uint64_t full[] = {50000, 500000, 2000000};
  const std::uint64_t desk[] = {50000, 200000, 20000};
  const int dims[] = {5, 10, 100};
  for (int ki = 0; ki < 2; ++ki) {
    const auto kind = ki == 0 ? EnsembleKind::CUE : EnsembleKind::GUE;
    Panel& lead = ki == 0 ? pa : pb;
    Panel& sub = ki == 0 ? pc : pd;
    for (int di = 0; di < 3; ++di) {
      const int dim = dims[di];
      const auto n = c.nsim(desk[di], full[di]);
      c.rep.notes.push_back(std::string(to_string(kind)) + " D=" + std::to_string(dim) + ", N_sim=" + std::to_string(n) +
                            " (full scale: " + std::to_string(full[di]) + ")");
      const std::string tag = "fig2_" + std::string(to_string(kind)) + "_D" + std::to_string(dim);
      auto r = kind == EnsembleKind::CUE ? c.run(kind, dim, n, integer_times(2 * dim), 0, 0, tag)
                                         : c.run(kind, dim, n, {}, 2.0, 40, tag);
      auto s1 = points("D=" + std::to_string(dim), kPalette[di]);
      auto s2 = points("D=" + std::to_string(dim), kPalette[di]);
      for (const auto& row : r.table.rows) {
        s1.x.push_back(row.tau), s1.y.push_back(row.mean[1] / (double(dim) * dim));
        s2.x.push_back(row.tau), s2.y.push_back(-row.conn2), s2.err.push_back(row.conn2_se);
      }
      lead.series.push_back(s1);
      sub.series.push_back(s2);
      if (di == 2) {
        auto z2 = curve("2 z^2"), cz = curve("2z(t) - z(2t)");
        for (std::size_t j = 0; j < r.table.rows.size(); ++j) {
          const double z = r.prediction.z[j];
          z2.x.push_back(r.table.rows[j].tau), z2.y.push_back(2 * z * z);
          cz.x.push_back(r.table.rows[j].tau), cz.y.push_back(-r.prediction.conn2[j]);
        }
        lead.series.push_back(z2);
        sub.series.push_back(cz);
      }
      for (std::size_t j = 0; j < r.table.rows.size(); ++j) {
        const auto& row = r.table.rows[j];
        c.check(std::abs(row.sffc - dim * r.prediction.z[j]) <= 5 * row.sffc_se,
                tag + " mean at t=" + format_double(row.t));
      }
    }
  }
  c.svg(2, {pa, pb, pc, pd}, 2);
}

void figure3(Ctx& c) {
  const int dim = 10;
  const auto n = c.nsim(200000, 500000);
  std::vector<Panel> panels;
  for (int ki = 0; ki < 2; ++ki) {
    const auto kind = ki == 0 ? EnsembleKind::CUE : EnsembleKind::GUE;
    c.rep.notes.push_back(std::string(to_string(kind)) + " D=10, N_sim=" + std::to_string(n) + " (full scale: 5e5)");
    const std::string tag = "fig3_" + std::string(to_string(kind)) + "_D10";
    auto r = kind == EnsembleKind::CUE ? c.run(kind, dim, n, integer_times(2 * dim), 0, 0, tag)
                                       : c.run(kind, dim, n, {}, 2.0, 40, tag);
    Panel p{std::string(kind == EnsembleKind::CUE ? "CUE" : "GUE") + " D=10: E[SFF^n] vs n! (D z)^n", "tau", "",
            true, {}};
    for (int k = 0; k < 4; ++k) {
      auto s = points("n=" + std::to_string(k + 1), kPalette[k]);
      auto g = curve(k == 0 ? "n! (D z)^n" : "");
      for (std::size_t j = 0; j < r.table.rows.size(); ++j) {
        const auto& row = r.table.rows[j];
        s.x.push_back(row.tau), s.y.push_back(row.mean[k]);
        g.x.push_back(row.tau), g.y.push_back(r.prediction.gaussian[k][j]);
        if (kind == EnsembleKind::CUE && row.tau <= 0.5) {
          c.check(std::abs(row.mean[k] - r.prediction.gaussian[k][j]) <= 5 * row.se[k],
                  tag + " n=" + std::to_string(k + 1) + " at t=" + format_double(row.t));
        }
      }
      p.series.push_back(s);
      p.series.push_back(g);
    }
    panels.push_back(p);
  }
  c.svg(3, panels, 2);
}

void figure4(Ctx& c) {
  const int dim = 100;
  const std::uint64_t full[] = {20, 20000, 2000000};
  const std::uint64_t desk[] = {20, 20000, 200000};
  std::vector<Panel> panels;
  for (int ki = 0; ki < 2; ++ki) {
    const auto kind = ki == 0 ? EnsembleKind::CUE : EnsembleKind::GUE;
    Panel p{std::string(kind == EnsembleKind::CUE ? "CUE" : "GUE") + " D=100: |E[SFF^2] - 2 E[SFF]^2| / D", "tau", "",
            true, {}};
    PredictionCurve pred;
    for (int ni = 0; ni < 3; ++ni) {
      const auto n = c.nsim(desk[ni], full[ni]);
      c.rep.notes.push_back(std::string(to_string(kind)) + " D=100, N_sim=" + std::to_string(n) +
                            " (full scale: " + std::to_string(full[ni]) + ")");
      const std::string tag = "fig4_" + std::string(to_string(kind)) + "_N" + std::to_string(n);
      auto r = kind == EnsembleKind::CUE ? c.run(kind, dim, n, integer_times(2 * dim), 0, 0, tag)
                                         : c.run(kind, dim, n, {}, 2.0, 80, tag);
      auto s = points("N_sim=" + std::to_string(n), kPalette[3 + ni]);
      auto env = curve("D z^2 / sqrt(N_sim)");
      env.dashed = false;
      env.color = kPalette[3 + ni];
      env.label = "envelope N_sim=" + std::to_string(n);
      for (std::size_t j = 0; j < r.table.rows.size(); ++j) {
        const auto& row = r.table.rows[j];
        s.x.push_back(row.tau), s.y.push_back(std::abs(row.conn2));
        env.x.push_back(row.tau), env.y.push_back(conn2_envelope(dim, r.prediction.z[j], double(n)));
      }
      p.series.push_back(s);
      p.series.push_back(env);
      pred = r.prediction;
    }
    auto cz = curve("|z(2t) - 2z(t)|");
    for (std::size_t j = 0; j < pred.grid.size(); ++j) {
      cz.x.push_back(pred.grid.taus[j]), cz.y.push_back(std::abs(pred.conn2[j]));
    }
    p.series.push_back(cz);
    panels.push_back(p);
  }
  c.svg(4, panels, 2);
}

void figure8(Ctx& c) {
  std::vector<Panel> panels;
  for (int dim : {2, 3, 4}) {
    const auto n = c.nsim(200000, 200000);
    c.rep.notes.push_back("CUE D=" + std::to_string(dim) + ", N_sim=" + std::to_string(n));
    const std::string tag = "fig8_cue_D" + std::to_string(dim);
    auto r = c.run(EnsembleKind::CUE, dim, n, integer_times(3 * dim), 0, 0, tag);
    Panel p{"CUE D=" + std::to_string(dim), "tau", "", false, {}};
    auto m = points("mean SFF", "#000000"), v = points("Var(SFF)", kPalette[4]), g = points("D |E[SFF^2]-2E[SFF]^2|", kPalette[1]);
    auto pm = curve("D z"), pv = curve("prediction"), pg = curve("");
    const double d = dim;
    for (std::size_t j = 0; j < r.table.rows.size(); ++j) {
      const auto& row = r.table.rows[j];
      const double z = r.prediction.z[j];
      const double sff2 = r.prediction.sff2_exact[j];
      const double dev = d * d * std::abs(row.conn2);
      const double pdev = d * std::abs(sff2 - 2 * d * d * z * z);
      m.x.push_back(row.tau), m.y.push_back(row.mean[0]), m.err.push_back(row.se[0]);
      v.x.push_back(row.tau), v.y.push_back(row.var), v.err.push_back(row.var_se);
      g.x.push_back(row.tau), g.y.push_back(dev), g.err.push_back(d * d * row.conn2_se);
      pm.x.push_back(row.tau), pm.y.push_back(d * z);
      pv.x.push_back(row.tau), pv.y.push_back(sff2 - d * d * z * z);
      pg.x.push_back(row.tau), pg.y.push_back(pdev);
      const std::string at = tag + " t=" + format_double(row.t);
      c.check(std::abs(row.mean[0] - d * z) <= 5 * row.se[0], at + " mean");
      c.check(std::abs(row.var - (sff2 - d * d * z * z)) <= 5 * row.var_se, at + " variance");
      c.check(std::abs(dev - pdev) <= 5 * d * d * row.conn2_se, at + " deviation");
    }
    p.series = {m, v, g, pm, pv, pg};
    panels.push_back(p);
  }
  c.svg(8, panels, 3);
}

}  // namespace

FigureReport reproduce_figure(const FigureOptions& opt) {
  FigureReport rep;
  std::error_code ec;
  std::filesystem::create_directories(opt.out_dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create output directory '" + opt.out_dir + "'");
  Ctx c{opt, rep, std::filesystem::path(opt.out_dir)};
  switch (opt.id) {
    case 1: figure1(c); break;
    case 2: figure2(c); break;
    case 3: figure3(c); break;
    case 4: figure4(c); break;
    case 8: figure8(c); break;
    default: throw Error(ErrorCode::Config, "unknown figure id " + std::to_string(opt.id) + " (1, 2, 3, 4, 8)");
  }
  return rep;
}

}  // namespace sffkit::harness
