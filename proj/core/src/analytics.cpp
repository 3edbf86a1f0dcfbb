#include "sffkit/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sffkit/bessel.hpp"
#include "sffkit/error.hpp"

namespace sffkit {

double z_cue(double tau) {
  if (!(tau >= 0.0)) throw Error(ErrorCode::InvalidParameter, "z_cue: tau must be >= 0");
  return tau < 1.0 ? tau : 1.0;
}

double z_gue_th(double t, double th) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidParameter, "z_gue: t must be >= 0");
  const double x = std::numbers::pi * t / (4.0 * th);
  if (x >= 1.0) return 1.0;
  return 0.5 * (t / th) * std::sqrt(1.0 - x * x) + (2.0 / std::numbers::pi) * std::asin(x);
}

double z_gue(double t, int dim) { return z_gue_th(t, heisenberg_time(EnsembleKind::GUE, dim).value); }

double z_value(EnsembleKind kind, double t, int dim, ThConvention conv) {
  const double th = heisenberg_time(kind, dim, conv).value;
  return kind == EnsembleKind::CUE ? z_cue(t / th) : z_gue_th(t, th);
}

cplx ubar(EnsembleKind kind, double t, int dim) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidParameter, "ubar: t must be >= 0");
  if (kind == EnsembleKind::CUE) {
    if (t != std::floor(t)) throw Error(ErrorCode::InvalidParameter, "ubar: CUE time must be an integer");
    return t == 0.0 ? cplx(dim) : cplx(0.0);
  }
  if (t == 0.0) return dim;
  return dim * bessel_j1(2.0 * t) / t;
}

double gaussian_moment(int n, int dim, double z) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "gaussian_moment: n must be >= 1");
  if (n > 20) throw Error(ErrorCode::Overflow, "gaussian_moment: n > 20");
  if (!(z >= 0.0 && z <= 1.0)) throw Error(ErrorCode::InvalidParameter, "gaussian_moment: z must lie in [0, 1]");
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  return fact * std::pow(dim * z, n);
}

double conn2(EnsembleKind kind, double t, int dim, ThConvention conv) {
  return z_value(kind, 2.0 * t, dim, conv) - 2.0 * z_value(kind, t, dim, conv);
}

double sff2_exact(EnsembleKind kind, double t, int dim, bool include_ubar, ThConvention conv) {
  const double d = dim;
  const double z1 = z_value(kind, t, dim, conv);
  const double z2 = z_value(kind, 2.0 * t, dim, conv);
  const double base = 2.0 * d * d * z1 * z1 + d * (z2 - 2.0 * z1);
  if (!include_ubar) return base;
  // CUE mean traces vanish at integer t >= 1
  if (kind == EnsembleKind::CUE && t >= 1.0) return base;
  const cplx u = ubar(kind, t, dim);
  const cplx u2 = ubar(kind, 2.0 * t, dim);
  const cplx um = std::conj(u);
  const double a = std::norm(u);
  return a * a + (std::norm(u2) - 4.0 * a) + 2.0 * ((u2 * um * um).real() + 2.0 * a * d * z1) + base;
}

double sampling_envelope(int n, int dim, double z, double n_sim) {
  if (n < 1 || n > 10 || dim < 1 || !(n_sim > 0.0) || !(z >= 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "sampling_envelope: arguments must be positive");
  }
  double fn = 1.0, f2n = 1.0;
  for (int k = 2; k <= n; ++k) fn *= k;
  for (int k = 2; k <= 2 * n; ++k) f2n *= k;
  return std::pow(dim * z, n) * std::sqrt(f2n - fn * fn) / std::sqrt(n_sim);
}

double conn2_envelope(int dim, double z, double n_sim) {
  if (dim < 1 || !(n_sim > 0.0)) throw Error(ErrorCode::InvalidParameter, "conn2_envelope: arguments must be positive");
  return dim * z * z / std::sqrt(n_sim);
}

ScbaSolution scba_closed_form(double lambda, int dim) {
  if (!(std::abs(lambda) <= 2.0)) throw Error(ErrorCode::OutsideSupport, "scba: |lambda| > 2");
  ScbaSolution s;
  s.lambda = lambda;
  s.sigma = std::sqrt(std::max(0.0, 1.0 - 0.25 * lambda * lambda));
  s.gbar_plus = {0.5 * lambda, -s.sigma};
  s.density = dim / std::numbers::pi * s.sigma;
  return s;
}

ScbaSolution scba_solve(double lambda, int dim) {
  if (std::isnan(lambda)) throw Error(ErrorCode::InvalidInput, "scba: NaN lambda");
  if (!(std::abs(lambda) <= 2.0)) throw Error(ErrorCode::OutsideSupport, "scba: |lambda| > 2");
  ScbaSolution s;
  s.lambda = lambda;
  if (std::abs(lambda) == 2.0) {
    // double root at the band edge; the damped map converges only algebraically there
    s.gbar_plus = 0.5 * lambda;
  } else {
    cplx g(0.0, -1.0);
    bool done = false;
    for (int it = 1; it <= 100000; ++it) {
      const cplx next = 0.5 * g + 0.5 / (lambda - g);
      const double step = std::abs(next - g);
      g = next;
      if (step < 1e-12) {
        s.iterations = it;
        done = true;
        break;
      }
    }
    if (!done) throw Error(ErrorCode::Convergence, "scba: no convergence in 1e5 iterations");
    s.gbar_plus = g;
  }
  s.sigma = std::max(0.0, -s.gbar_plus.imag());
  s.density = dim / std::numbers::pi * s.sigma;
  return s;
}

double semicircle_density(double lambda, int dim) {
  if (std::abs(lambda) >= 2.0) return 0.0;
  return dim / (2.0 * std::numbers::pi) * std::sqrt(4.0 - lambda * lambda);
}

double perturbative_rho_c(double lambda1, double lambda2) {
  const double d = lambda1 - lambda2;
  if (d == 0.0) throw Error(ErrorCode::Singularity, "perturbative_rho_c: coincident arguments");
  return -1.0 / (2.0 * std::numbers::pi * std::numbers::pi * d * d);
}

double PredictionCurve::envelope(int n, std::size_t j, double n_sim) const {
  return sampling_envelope(n, grid.dim, z.at(j), n_sim);
}

PredictionCurve predict(const TimeGrid& grid) {
  PredictionCurve p;
  p.grid = grid;
  const std::size_t m = grid.size();
  p.z.resize(m);
  p.conn2.resize(m);
  p.gaussian.assign(4, std::vector<double>(m));
  p.ubar.resize(m);
  p.sff2_exact.resize(m);
  p.sff2_approx.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = grid.times[j];
    p.z[j] = z_value(grid.kind, t, grid.dim, grid.convention);
    p.conn2[j] = conn2(grid.kind, t, grid.dim, grid.convention);
    for (int n = 1; n <= 4; ++n) p.gaussian[n - 1][j] = gaussian_moment(n, grid.dim, p.z[j]);
    p.ubar[j] = ubar(grid.kind, t, grid.dim);
    p.sff2_exact[j] = sff2_exact(grid.kind, t, grid.dim, true, grid.convention);
    p.sff2_approx[j] = sff2_exact(grid.kind, t, grid.dim, false, grid.convention);
  }
  return p;
}

}  // namespace sffkit
