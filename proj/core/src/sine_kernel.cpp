#include "sffkit/sine_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>

#include "sffkit/analytics.hpp"
#include "sffkit/error.hpp"

namespace sffkit {

KernelSpec cue_kernel_spec(int dim) { return {dim / (2.0 * std::numbers::pi), dim}; }

double kernel_value(const KernelSpec& spec, double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidInput, "kernel_value: non-finite separation");
  if (x == 0.0) return spec.rho_bar;
  const double a = std::numbers::pi * spec.rho_bar * x;
  return spec.rho_bar * std::sin(a) / a;
}

double r_n_det(const KernelSpec& spec, std::span<const double> points) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "r_n_det: no points");
  if (n > 6) throw Error(ErrorCode::UnsupportedOrder, "r_n_det: order above 6");
  std::array<double, 36> m{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = kernel_value(spec, points[i] - points[j]);
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i * n + k]) > std::abs(m[p * n + k])) p = i;
    if (m[p * n + k] == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      det = -det;
    }
    det *= m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m[i * n + k] / m[k * n + k];
      for (std::size_t j = k + 1; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
    }
  }
  return det;
}

BoxResult box_convolution(const BoxProduct& bp) {
  if (bp.weights.empty()) throw Error(ErrorCode::InvalidInput, "box_convolution: empty weights");
  if (bp.dim < 1) throw Error(ErrorCode::InvalidParameter, "box_convolution: dimension must be >= 1");
  double total = 0.0, scale = 1.0;
  for (double k : bp.weights) {
    total += k;
    scale = std::max(scale, std::abs(k));
  }
  if (std::abs(total) > 1e-12 * scale) return {0.0, false};
  double lo = -0.5, hi = 0.5, partial = 0.0;
  for (std::size_t i = 0; i + 1 < bp.weights.size(); ++i) {
    partial += bp.weights[i];
    const double c = partial / (2.0 * bp.dim);
    lo = std::max(lo, -0.5 - c);
    hi = std::min(hi, 0.5 - c);
  }
  return {std::max(0.0, hi - lo), true};
}

double cue_cycle_integral(std::span<const double> weights, int dim) {
  BoxProduct bp{{}, dim};
  bp.weights.reserve(weights.size());
  for (double w : weights) bp.weights.push_back(2.0 * w);
  const auto r = box_convolution(bp);
  return r.on_shell ? dim * r.value : 0.0;
}

double cue_rn_integral(std::span<const double> weights, int dim) {
  const std::size_t n = weights.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cue_rn_integral: empty weights");
  if (n > 6) throw Error(ErrorCode::UnsupportedOrder, "cue_rn_integral: order above 6");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  std::vector<bool> seen(n);
  std::vector<double> cyc;
  do {
    std::fill(seen.begin(), seen.end(), false);
    double term = 1.0;
    int transpositions = 0;
    for (std::size_t s = 0; s < n && term != 0.0; ++s) {
      if (seen[s]) continue;
      cyc.clear();
      for (std::size_t j = s; !seen[j]; j = perm[j]) {
        seen[j] = true;
        cyc.push_back(weights[j]);
      }
      transpositions += static_cast<int>(cyc.size()) - 1;
      term *= cue_cycle_integral(cyc, dim);
    }
    total += (transpositions % 2 ? -term : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

IdentityPair three_type_identity(double t, int dim) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidParameter, "three_type_identity: t must be >= 0");
  const std::array<double, 3> w{2.0 * t, -t, -t};
  return {2.0 * cue_cycle_integral(w, dim), 2.0 * dim * (1.0 - z_cue(2.0 * t / dim))};
}

std::array<IdentityPair, 3> four_type_identities(double t, int dim) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidParameter, "four_type_identities: t must be >= 0");
  const std::array<double, 4> w{t, t, -t, -t};
  auto along = [&](std::array<int, 4> order) {
    std::array<double, 4> c{};
    for (int i = 0; i < 4; ++i) c[i] = w[order[i]];
    return cue_cycle_integral(c, dim);
  };
  const double d = dim;
  return {{
      {along({0, 2, 1, 3}), d * (1.0 - z_cue(t / d))},
      {along({0, 1, 2, 3}), d * (1.0 - z_cue(2.0 * t / d))},
      {along({0, 1, 3, 2}), d * (1.0 - z_cue(2.0 * t / d))},
  }};
}

double assemble_sff2(double t, int dim) {
  if (!(t >= 0.0) || t != std::floor(t)) throw Error(ErrorCode::InvalidParameter, "assemble_sff2: t must be a non-negative integer");
  const double d = dim;
  const std::array<double, 4> w4{t, t, -t, -t};
  const std::array<double, 3> w3{2.0 * t, -t, -t};
  const std::array<double, 2> w2a{2.0 * t, -2.0 * t};
  const std::array<double, 2> w2b{t, -t};
  return cue_rn_integral(w4, dim) + 2.0 * cue_rn_integral(w3, dim) + cue_rn_integral(w2a, dim) +
         4.0 * (d - 1.0) * cue_rn_integral(w2b, dim) + 2.0 * d * d - d;
}

}  // namespace sffkit
