#include "sffkit/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sffkit/error.hpp"

namespace sffkit {
namespace {

template <class T>
std::complex<T> z_saddle_impl(const std::array<int, 4>& sigma, const std::array<T, 4>& phi,
                              const std::array<T, 4>& alpha, int dim, double guard) {
  using C = std::complex<T>;
  auto s = [&](int i) { return sigma[i] - 1; };
  T ratio = 1;
  for (int i = 0; i < 2; ++i) {
    for (int k = 2; k < 4; ++k) {
      const T den1 = phi[i] - phi[k];
      const T den2 = phi[s(i)] - phi[s(k)] + alpha[s(i)] - alpha[s(k)];
      if (std::abs(static_cast<double>(den1)) < guard || std::abs(static_cast<double>(den2)) < guard) {
        throw Error(ErrorCode::Singularity, "z_saddle: pole within guard");
      }
      const T num = (phi[i] - phi[s(k)] - alpha[s(k)]) * (phi[k] - phi[s(i)] - alpha[s(i)]);
      ratio *= num / (den1 * den2);
    }
  }
  T ex = 0;
  for (int i = 0; i < 4; ++i) {
    const T term = phi[i] - phi[s(i)] - alpha[s(i)];
    ex += i < 2 ? term : -term;
  }
  return ratio * std::exp(C(0, static_cast<T>(dim) * ex / 2));
}

void guard_phases(const Phases& phi, double guard) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(phi[i] - phi[j]) < guard) throw Error(ErrorCode::Singularity, "phase separation within pole guard");
}

using cd = std::complex<double>;

cd f_identity(const Phases& p, int dim) {
  auto d = [&](int i, int j) { return p[i - 1] - p[j - 1]; };
  auto inv2 = [&](int i, int j) { return 1.0 / (d(i, j) * d(i, j)); };
  const double h = 0.5 * dim;
  return h * h * h * h - h * h * (inv2(1, 3) + inv2(2, 3) + inv2(1, 4) + inv2(2, 4)) + inv2(2, 3) * inv2(1, 4) +
         inv2(1, 3) * inv2(2, 4);
}

// Single transposition written for T13, with labels remapped through m.
cd f_single(const Phases& p, int dim, const std::array<int, 4>& m) {
  auto d = [&](int i, int j) { return p[m[i - 1] - 1] - p[m[j - 1] - 1]; };
  const double D = dim;
  const double d13 = d(1, 3);
  const double d13sq = d13 * d13;
  const cd poly = D * D / (4.0 * d13sq) +
                  cd(0.0, D / (2.0 * d13sq)) * (1.0 / d(1, 2) + 1.0 / d(2, 3) + 1.0 / d(4, 3) + 1.0 / d(1, 4)) -
                  1.0 / (d13sq * d(2, 4) * d(2, 4)) - 1.0 / (d(1, 2) * d(2, 3) * d(3, 4) * d(4, 1));
  return poly * std::exp(cd(0.0, D * d13));
}

cd f_double(const Phases& p, int dim) {
  auto d = [&](int i, int j) { return p[i - 1] - p[j - 1]; };
  auto sq = [](double x) { return x * x; };
  const double r = sq(d(1, 2)) * sq(d(3, 4)) / (sq(d(1, 3)) * sq(d(3, 2)) * sq(d(2, 4)) * sq(d(4, 1)));
  return r * std::exp(cd(0.0, dim * (d(1, 3) + d(2, 4))));
}

}  // namespace

const std::array<SaddleConfig, 6>& saddle_table() {
  static const std::array<SaddleConfig, 6> table{{
      {{1, 2, 3, 4}, SaddleKind::Identity, "I"},
      {{3, 2, 1, 4}, SaddleKind::SingleTransposition, "T13"},
      {{4, 2, 3, 1}, SaddleKind::SingleTransposition, "T14"},
      {{1, 3, 2, 4}, SaddleKind::SingleTransposition, "T23"},
      {{1, 4, 3, 2}, SaddleKind::SingleTransposition, "T24"},
      {{4, 3, 2, 1}, SaddleKind::DoubleTransposition, "T14T23"},
  }};
  return table;
}

const SaddleConfig& saddle_by_name(const std::string& name) {
  for (const auto& c : saddle_table())
    if (c.name == name) return c;
  throw Error(ErrorCode::InvalidParameter, "unknown saddle '" + name + "'");
}

void validate(const SaddleConfig& cfg) {
  for (const auto& c : saddle_table()) {
    if (c.sigma == cfg.sigma) {
      if (c.kind != cfg.kind) throw Error(ErrorCode::InvalidInput, "saddle kind inconsistent with permutation");
      return;
    }
  }
  throw Error(ErrorCode::InvalidInput, "permutation is not one of the six saddles");
}

cd z_saddle(const SaddleConfig& cfg, const PhasePoint& p) {
  validate(cfg);
  if (!(p.deltas[0] > 0 && p.deltas[0] < p.deltas[1] && p.deltas[2] > 0 && p.deltas[2] < p.deltas[3])) {
    throw Error(ErrorCode::InvalidParameter, "z_saddle: regulators must satisfy 0<d1<d2, 0<d3<d4");
  }
  return z_saddle_impl<double>(cfg.sigma, p.phi, p.alpha, p.dim, p.pole_guard);
}

cd f_closed(const SaddleConfig& cfg, const Phases& phi, int dim, double pole_guard) {
  validate(cfg);
  guard_phases(phi, pole_guard);
  switch (cfg.kind) {
    case SaddleKind::Identity:
      return f_identity(phi, dim);
    case SaddleKind::DoubleTransposition:
      return f_double(phi, dim);
    case SaddleKind::SingleTransposition:
      break;
  }
  if (cfg.name == "T13") return f_single(phi, dim, {1, 2, 3, 4});
  if (cfg.name == "T14") return f_single(phi, dim, {1, 2, 4, 3});
  if (cfg.name == "T23") return f_single(phi, dim, {2, 1, 3, 4});
  return f_single(phi, dim, {2, 1, 4, 3});
}

NumericDerivative f_numeric_detail(const SaddleConfig& cfg, const Phases& phi, int dim, double step) {
  validate(cfg);
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) min_gap = std::min(min_gap, std::abs(phi[i] - phi[j]));
  if (step <= 0.0) step = 1e-2 * min_gap;
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorCode::StepSize, "f_numeric: invalid step");

  using LD = long double;
  const std::array<LD, 4> lphi{phi[0], phi[1], phi[2], phi[3]};
  auto central = [&](LD h) {
    std::complex<LD> acc = 0;
    for (int mask = 0; mask < 16; ++mask) {
      std::array<LD, 4> a{};
      int sign = 1;
      for (int b = 0; b < 4; ++b) {
        const bool neg = (mask >> b) & 1;
        a[b] = neg ? -h : h;
        if (neg) sign = -sign;
      }
      const auto z = z_saddle_impl<LD>(cfg.sigma, lphi, a, dim, 0.0);
      acc += sign > 0 ? z : -z;
    }
    const LD w = 2 * h;
    return acc / (w * w * w * w);
  };
  const auto coarse = central(step);
  const auto fine = central(step / 2);
  const auto rich = (static_cast<LD>(4) * fine - coarse) / static_cast<LD>(3);
  const LD scale = std::max(std::abs(coarse), std::abs(fine));
  if (!std::isfinite(static_cast<double>(std::abs(rich))) || std::abs(coarse - fine) > 1e-2L * scale) {
    throw Error(ErrorCode::StepSize, "f_numeric: Richardson pair did not converge");
  }
  NumericDerivative r;
  r.value = {static_cast<double>(rich.real()), static_cast<double>(rich.imag())};
  r.coarse = {static_cast<double>(coarse.real()), static_cast<double>(coarse.imag())};
  r.fine = {static_cast<double>(fine.real()), static_cast<double>(fine.imag())};
  r.step = step;
  return r;
}

cd f_numeric(const SaddleConfig& cfg, const Phases& phi, int dim, double step) {
  return f_numeric_detail(cfg, phi, dim, step).value;
}

TimeDomainMoment sff2_timedomain(double tau, int dim) {
  if (!(tau >= 0.0)) throw Error(ErrorCode::InvalidParameter, "sff2_timedomain: tau must be >= 0");
  const double d = dim;
  TimeDomainMoment m;
  m.disconnected = 2.0 * d * d * (tau < 1.0 ? tau * tau : 1.0);
  if (tau < 0.5) {
    m.connected = 0.0;
  } else if (tau < 1.0) {
    m.connected = -d * (2.0 * tau - 1.0);
  } else {
    m.connected = -d;
  }
  return m;
}

}  // namespace sffkit
