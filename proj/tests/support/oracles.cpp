#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace sffkit::oracle {

std::vector<double> jacobi_hermitian_eigenvalues(const ComplexMatrix& h) {
  const std::size_t n = h.dim(), m = 2 * n;
  std::vector<double> a(m * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto z = h(i, j);
      a[i * m + j] = z.real();
      a[(i + n) * m + j + n] = z.real();
      a[i * m + j + n] = -z.imag();
      a[(i + n) * m + j] = z.imag();
    }
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += a[p * m + q] * a[p * m + q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = a[p * m + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * m + q] - a[p * m + p]) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = a[k * m + p], akq = a[k * m + q];
          a[k * m + p] = c * akp - s * akq;
          a[k * m + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = a[p * m + k], aqk = a[q * m + k];
          a[p * m + k] = c * apk - s * aqk;
          a[q * m + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = a[i * m + i];
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < m; i += 2) out.push_back(0.5 * (all[i] + all[i + 1]));
  return out;
}

double permutation_det(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long double total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    long double term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(total);
}

MeanSe two_pass_batch_se(std::span<const double> group_means) {
  const double k = static_cast<double>(group_means.size());
  double mean = 0.0;
  for (double x : group_means) mean += x;
  mean /= k;
  double ss = 0.0;
  for (double x : group_means) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (k - 1) / k)};
}

std::complex<double> cue_cycle_quadrature(std::span<const double> weights, int dim, int points) {
  using C = std::complex<double>;
  const double pi = std::numbers::pi;
  const std::size_t m = static_cast<std::size_t>(points);
  const double h = 2 * pi / points;
  std::vector<double> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = -pi + h * static_cast<double>(i);
  auto kernel = [&](double d) {
    const double s = std::sin(d / 2);
    if (std::abs(s) < 1e-14) return dim / (2 * pi) * (std::cos(d / 2 * (dim - 1)) >= 0 ? 1.0 : -1.0);
    return std::sin(dim * d / 2) / (2 * pi * s);
  };
  std::vector<double> k(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) k[a * m + b] = kernel(x[a] - x[b]) * h;
  // trace of prod_l diag(exp(i w_l x)) K
  std::vector<C> acc(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a) acc[a * m + a] = 1.0;
  for (double w : weights) {
    std::vector<C> next(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c) {
        const C e = std::exp(C(0, w * x[c]));
        for (std::size_t b = 0; b < m; ++b) next[a * m + b] += acc[a * m + c] * e * k[c * m + b];
      }
    acc.swap(next);
  }
  C tr = 0.0;
  for (std::size_t a = 0; a < m; ++a) tr += acc[a * m + a];
  return tr;
}

}  // namespace sffkit::oracle
