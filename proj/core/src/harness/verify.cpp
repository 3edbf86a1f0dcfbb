#include "sffkit/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sffkit/analytics.hpp"
#include "sffkit/error.hpp"
#include "sffkit/rng.hpp"
#include "sffkit/saddle.hpp"
#include "sffkit/sine_kernel.hpp"

namespace sffkit::harness {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string VerifyReport::format() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "error=%.3e tol=%.1e", c.error, c.tolerance);
    os << (c.pass ? "[PASS] " : "[FAIL] ") << suite << "/" << c.name << "  " << buf;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  os << suite << ": " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

namespace {

Check make_check(std::string name, double err, double tol, std::string note = {}) {
  return {std::move(name), err, tol, std::isfinite(err) && err <= tol, std::move(note)};
}

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// phi_i uniform in [-0.5, 0.5] with all separations at least 0.05
Phases random_phases(RngStream& rng) {
  while (true) {
    Phases p;
    for (auto& x : p) x = rng.uniform() - 0.5;
    bool ok = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) ok = ok && std::abs(p[i] - p[j]) >= 0.05;
    if (ok) return p;
  }
}

VerifyReport verify_saddles() {
  VerifyReport r{"saddles", {}};
  r.checks.push_back(make_check("table has six saddles", std::abs(double(saddle_table().size()) - 6.0), 0.0));
  for (const auto& cfg : saddle_table()) {
    for (int dim : {4, 10}) {
      RngStream rng(20240601, static_cast<std::uint64_t>(dim));
      double worst = 0.0;
      for (int k = 0; k < 20; ++k) {
        const auto phi = random_phases(rng);
        const auto fc = f_closed(cfg, phi, dim);
        const auto fn = f_numeric(cfg, phi, dim);
        worst = std::max(worst, std::abs(fn - fc) / std::abs(fc));
      }
      r.checks.push_back(make_check("f_numeric vs f_closed " + cfg.name + " D=" + std::to_string(dim), worst, 1e-5));
    }
  }
  RngStream rng(777, 0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto p = random_phases(rng);
    const Phases swapped{p[1], p[0], p[3], p[2]};
    const auto a = f_closed(saddle_by_name("T24"), p, 10);
    const auto b = f_closed(saddle_by_name("T13"), swapped, 10);
    worst = std::max(worst, std::abs(a - b) / std::abs(b));
  }
  r.checks.push_back(make_check("T24 equals T13 under 1<->2, 3<->4", worst, 1e-12));
  return r;
}

VerifyReport verify_kernel() {
  VerifyReport r{"kernel", {}};
  for (int dim : {2, 5, 8, 10, 20}) {
    double e3 = 0.0, e4 = 0.0;
    for (int t = 0; t <= 2 * dim; ++t) {
      const auto p = three_type_identity(t, dim);
      e3 = std::max(e3, std::abs(p.lhs - p.rhs));
      for (const auto& q : four_type_identities(t, dim)) e4 = std::max(e4, std::abs(q.lhs - q.rhs));
    }
    r.checks.push_back(make_check("three-type identity D=" + std::to_string(dim), e3, 1e-10));
    r.checks.push_back(make_check("four-type identities D=" + std::to_string(dim), e4, 1e-10));
  }
  const KernelSpec spec{1.0, 1};
  RngStream rng(99, 0);
  double sym = 0.0, neg = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 5;
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (auto& x : pts) x = 4.0 * rng.uniform();
    const double a = r_n_det(spec, pts);
    std::vector<double> rev(pts.rbegin(), pts.rend());
    std::rotate(rev.begin(), rev.begin() + 1, rev.end());
    sym = std::max(sym, std::abs(a - r_n_det(spec, rev)));
    neg = std::max(neg, -a);
  }
  r.checks.push_back(make_check("r_n_det permutation symmetry", sym, 1e-12));
  r.checks.push_back(make_check("r_n_det non-negative", std::max(0.0, neg), 1e-12));
  r.checks.push_back(make_check("kernel zero at unit spacing", std::abs(kernel_value({2.5, 1}, 1.0 / 2.5)), 1e-15));
  return r;
}

VerifyReport verify_scba() {
  VerifyReport r{"scba", {}};
  const int dim = 100;
  double eg = 0.0, ed = 0.0, en = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double lam = -2.0 + 4.0 * k / 99.0;
    const auto s = scba_solve(lam, dim);
    const auto c = scba_closed_form(lam, dim);
    eg = std::max(eg, std::abs(s.gbar_plus - c.gbar_plus));
    ed = std::max(ed, std::abs(s.density - semicircle_density(lam, dim)) / dim);
    en = std::max(en, std::abs(c.sigma * c.sigma + 0.25 * lam * lam - 1.0));
  }
  r.checks.push_back(make_check("iterated Gbar vs closed form, 100 points", eg, 1e-10));
  r.checks.push_back(make_check("(D/pi) Sigma vs semicircle density / D", ed, 1e-10));
  r.checks.push_back(make_check("Sigma^2 + (lambda/2)^2 = 1", en, 1e-12));
  return r;
}

VerifyReport verify_identities() {
  VerifyReport r{"identities", {}};
  for (int dim : {2, 3, 4, 5, 10}) {
    double ea = 0.0, et = 0.0, ea1 = 0.0, et1 = 0.0;
    std::string bad_a, bad_t;
    for (int t = 0; t <= 3 * dim; ++t) {
      const double ex = sff2_exact(EnsembleKind::CUE, t, dim, true);
      const double as = assemble_sff2(t, dim);
      const double td = sff2_timedomain(static_cast<double>(t) / dim, dim).sum();
      const double a = rel(as, ex), b = rel(ex, td);
      if (a > 1e-12 && bad_a.empty()) bad_a = "first failure t=" + std::to_string(t);
      if (b > 1e-12 && bad_t.empty()) bad_t = "first failure t=" + std::to_string(t);
      ea = std::max(ea, a);
      et = std::max(et, b);
      if (t >= 1) ea1 = std::max(ea1, a), et1 = std::max(et1, b);
    }
    auto tail = [](const std::string& bad, double e1) {
      if (bad.empty()) return bad;
      char buf[48];
      std::snprintf(buf, sizeof buf, "; max over t>=1 %.1e", e1);
      return bad + buf;
    };
    bad_a = tail(bad_a, ea1);
    bad_t = tail(bad_t, et1);
    r.checks.push_back(make_check("assemble_sff2 vs sff2_exact D=" + std::to_string(dim), ea, 1e-12, bad_a));
    r.checks.push_back(make_check("sff2_exact vs sff2_timedomain D=" + std::to_string(dim), et, 1e-12, bad_t));
    double ec = 0.0;
    for (int t = 0; t <= 3 * dim; ++t) {
      const double z = z_cue(static_cast<double>(t) / dim);
      const double lhs = sff2_exact(EnsembleKind::CUE, t, dim, false) - gaussian_moment(2, dim, z);
      ec = std::max(ec, std::abs(lhs - dim * conn2(EnsembleKind::CUE, t, dim)));
    }
    r.checks.push_back(make_check("sff2 approx - gaussian(2) = D conn2, D=" + std::to_string(dim), ec, 1e-9));
  }
  return r;
}

}  // namespace

VerifyReport run_verify(const std::string& suite) {
  if (suite == "saddles") return verify_saddles();
  if (suite == "kernel") return verify_kernel();
  if (suite == "scba") return verify_scba();
  if (suite == "identities") return verify_identities();
  throw Error(ErrorCode::Config, "unknown verify suite '" + suite + "' (saddles, kernel, scba, identities)");
}

}  // namespace sffkit::harness
