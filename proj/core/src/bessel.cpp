#include "sffkit/bessel.hpp"

#include <cmath>
#include <numbers>

#include "sffkit/error.hpp"

namespace sffkit {
namespace {

double j1_series(double x) {
  const double h = 0.5 * x;
  const double h2 = h * h;
  double term = h;
  double sum = term;
  for (int k = 1; k < 60; ++k) {
    term *= -h2 / (static_cast<double>(k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Miller backward recurrence normalised by J0 + 2 sum J_2k = 1.
double j1_miller(double x) {
  int start = static_cast<int>(x + 40.0 + 3.0 * std::sqrt(x));
  if (start % 2) ++start;
  const double two_over_x = 2.0 / x;
  double jp1 = 0.0, j = 1e-300, j1 = 0.0, norm = 0.0;
  for (int k = start; k >= 1; --k) {
    const double jm1 = k * two_over_x * j - jp1;
    jp1 = j;
    j = jm1;  // now J_{k-1}
    if (k - 1 == 1) j1 = j;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * j;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp1 *= 1e-250;
      j1 *= 1e-250;
      norm *= 1e-250;
    }
  }
  norm += j;  // J_0
  return j1 / norm;
}

// Hankel asymptotic expansion.
double j1_asymptotic(double x) {
  const double mu = 4.0;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double f = (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * x);
    const double next = term * f;
    if (std::abs(next) > std::abs(last)) break;
    term = next;
    last = next;
    // a_k / x^k enters P with sign (-1)^{k/2} for even k, Q with (-1)^{(k-1)/2} for odd k
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
    }
    if (std::abs(term) < 1e-18) break;
  }
  const double w = x - 0.75 * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(w) - q * std::sin(w));
}

}  // namespace

double bessel_j1(double x) {
  if (std::isnan(x)) throw Error(ErrorCode::InvalidInput, "bessel_j1: NaN argument");
  if (std::isinf(x)) return 0.0;
  const double ax = std::abs(x);
  double r;
  if (ax < 8.0) {
    r = j1_series(ax);
  } else if (ax < 25.0) {
    r = j1_miller(ax);
  } else {
    r = j1_asymptotic(ax);
  }
  return x < 0.0 ? -r : r;
}

}  // namespace sffkit
