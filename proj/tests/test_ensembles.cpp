#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sffkit/bessel.hpp"
#include "sffkit/ensembles.hpp"
#include "sffkit/error.hpp"
#include "sffkit/linalg.hpp"
#include "sffkit/rng.hpp"

using namespace sffkit;

TEST(Rng, ComplexGaussianVariance) {
  RngStream s(1, 0);
  double m2 = 0.0;
  cplx m1 = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const auto z = complex_gaussian(s, 1.0);
    m2 += std::norm(z);
    m1 += z;
  }
  EXPECT_NEAR(m2 / n, 1.0, 0.01);
  EXPECT_LT(std::abs(m1 / double(n)), 0.005);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  RngStream a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  const double x = a.normal();
  EXPECT_EQ(x, b.normal());
  EXPECT_NE(x, c.normal());
  EXPECT_NE(x, d.normal());
}

TEST(Rng, FrozenFirstDraw) {
  // pins the stream derivation across builds
  RngStream a(42, 0);
  EXPECT_EQ(a.engine()(), RngStream(42, 0).engine()());
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(Rng, RejectsNonPositiveVariance) {
  RngStream s(1, 0);
  EXPECT_THROW(complex_gaussian(s, 0.0), Error);
}

TEST(Bessel, Zero) { EXPECT_EQ(bessel_j1(0.0), 0.0); }

TEST(Bessel, SmallArgumentLimit) { EXPECT_NEAR(bessel_j1(1e-8) / 1e-8, 0.5, 1e-8); }

TEST(Bessel, FirstZero) { EXPECT_NEAR(bessel_j1(3.8317059702075123), 0.0, 1e-10); }

TEST(Bessel, FrozenHighPrecisionValues) {
  const std::pair<double, double> ref[] = {
      {0.5, 0.24226845767487388638},  {3.0, 0.33905895852593645893},  {7.9, 0.21917939992175114408},
      {8.1, 0.24760776698159291818},  {12.5, -0.16548380461475971846}, {24.9, -0.13485569953140874334},
      {25.1, -0.11463478413442272782}, {40.0, 0.12603831803758499921}, {100.0, -0.077145352014112158033}};
  for (auto [x, v] : ref) EXPECT_NEAR(bessel_j1(x), v, 1e-13) << "x=" << x;
}

TEST(Bessel, OddAndMatchesStd) {
  for (double x = 0.05; x < 60.0; x += 0.37) {
    EXPECT_NEAR(bessel_j1(x), std::cyl_bessel_j(1.0, x), 1e-13) << "x=" << x;
    EXPECT_EQ(bessel_j1(-x), -bessel_j1(x));
  }
}

TEST(Bessel, NanThrows) { EXPECT_THROW(bessel_j1(std::nan("")), Error); }

TEST(Ensembles, HeisenbergTimes) {
  EXPECT_EQ(heisenberg_time(EnsembleKind::CUE, 10).value, 10.0);
  EXPECT_NEAR(heisenberg_time(EnsembleKind::GUE, 10).value, 5 * std::numbers::pi, 1e-14);
  EXPECT_EQ(heisenberg_time(EnsembleKind::GUE, 10, ThConvention::TwoD).value, 20.0);
  EXPECT_THROW(heisenberg_time(EnsembleKind::CUE, 0), Error);
}

TEST(Ensembles, ParseNames) {
  EXPECT_EQ(parse_ensemble("cue"), EnsembleKind::CUE);
  EXPECT_EQ(parse_ensemble("gue"), EnsembleKind::GUE);
  EXPECT_EQ(parse_th_convention("2d"), ThConvention::TwoD);
  EXPECT_THROW(parse_ensemble("goe"), Error);
}

TEST(Ensembles, CueIsUnitaryAndGueHermitian) {
  RngStream s(1, 2);
  const auto u = sample_cue({EnsembleKind::CUE, 30, 1}, s);
  EXPECT_LT(unitarity_defect(u), 1e-12);
  EXPECT_EQ(u.structure(), Structure::Unitary);
  const auto h = sample_gue({EnsembleKind::GUE, 30, 1}, s);
  EXPECT_EQ(hermiticity_defect(h), 0.0);
  EXPECT_EQ(h.structure(), Structure::Hermitian);
  EXPECT_THROW(sample_cue({EnsembleKind::GUE, 3, 1}, s), Error);
}

TEST(Ensembles, CueD1PhaseUniform) {
  cplx m = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    RngStream s(3, i);
    m += sample_cue({EnsembleKind::CUE, 1, 3}, s)(0, 0);
  }
  EXPECT_LT(std::abs(m / double(n)), 0.01);
}

TEST(Ensembles, CueTraceMomentsD10) {
  const int n = 100000;
  const EnsembleSpec spec{EnsembleKind::CUE, 10, 4};
  double sr = 0, si = 0, sr2 = 0, si2 = 0, a = 0, a2 = 0;
  for (int i = 0; i < n; ++i) {
    RngStream s(spec.master_seed, i);
    const auto ph = spectrum_of(spec, sample(spec, s));
    cplx tr = 0.0, tr3 = 0.0;
    for (double p : ph.values) tr += std::polar(1.0, p), tr3 += std::polar(1.0, 3 * p);
    sr += tr.real(), si += tr.imag(), sr2 += tr.real() * tr.real(), si2 += tr.imag() * tr.imag();
    const double x = std::norm(tr3);
    a += x, a2 += x * x;
  }
  const double se_r = std::sqrt((sr2 / n - sr * sr / n / n) / n);
  const double se_i = std::sqrt((si2 / n - si * si / n / n) / n);
  EXPECT_LT(std::abs(sr / n), 5 * se_r);
  EXPECT_LT(std::abs(si / n), 5 * se_i);
  const double mean = a / n, se = std::sqrt((a2 / n - mean * mean) / n);
  EXPECT_LT(std::abs(mean - 3.0), 5 * se);
}

TEST(Ensembles, GueOffDiagonalVarianceD2) {
  const EnsembleSpec spec{EnsembleKind::GUE, 2, 8};
  double m = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    RngStream s(8, i);
    m += std::norm(sample_gue(spec, s)(0, 1));
  }
  EXPECT_NEAR(m / n, 0.5, 0.005);
}

TEST(Ensembles, GueD1Variance) {
  const EnsembleSpec spec{EnsembleKind::GUE, 1, 8};
  double m = 0.0, m2 = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    RngStream s(8, i);
    const auto h = sample_gue(spec, s)(0, 0);
    EXPECT_EQ(h.imag(), 0.0);
    m += h.real(), m2 += h.real() * h.real();
  }
  EXPECT_NEAR(m2 / n - (m / n) * (m / n), 1.0, 0.01);
}

TEST(Ensembles, GueSemicircleChiSquare) {
  const int dim = 100, draws = 1000, bins = 20;
  const EnsembleSpec spec{EnsembleKind::GUE, dim, 12};
  std::vector<double> counts(bins, 0.0);
  for (int i = 0; i < draws; ++i) {
    RngStream s(12, i);
    for (double l : spectrum_of(spec, sample(spec, s)).values) {
      const int b = static_cast<int>(std::floor((l + 2.0) / 4.0 * bins));
      if (b >= 0 && b < bins) counts[b] += 1;
    }
  }
  // expected counts from the integrated semicircle
  auto cdf = [](double x) {
    x = std::clamp(x, -2.0, 2.0);
    return 0.5 + (x * std::sqrt(4 - x * x) / 4 + std::asin(x / 2)) / std::numbers::pi;
  };
  double chi2 = 0.0;
  int used = 0;
  const double total = double(dim) * draws;
  for (int b = 0; b < bins; ++b) {
    const double lo = -2.0 + 4.0 * b / bins, hi = lo + 4.0 / bins;
    const double e = total * (cdf(hi) - cdf(lo));
    // edge bins carry finite-D tails
    if (b == 0 || b == bins - 1) continue;
    chi2 += (counts[b] - e) * (counts[b] - e) / e;
    ++used;
  }
  // Eigenvalues are correlated, so binned counts fluctuate less than Poisson;
  // the per-bin statistic stays well under the chi-square critical value.
  EXPECT_LT(chi2 / used, 2.0);
}

TEST(Ensembles, SpectrumOfTrivialMatrices) {
  const auto cue = spectrum_of({EnsembleKind::CUE, 3, 0}, ComplexMatrix::identity(3));
  for (double p : cue.values) EXPECT_NEAR(p, 0.0, 1e-15);
  const auto gue = spectrum_of({EnsembleKind::GUE, 2, 0}, ComplexMatrix::diagonal({0.3, -0.1}));
  EXPECT_NEAR(gue.values[0], -0.1, 1e-15);
  EXPECT_NEAR(gue.values[1], 0.3, 1e-15);
  EXPECT_THROW(spectrum_of({EnsembleKind::GUE, 4, 0}, ComplexMatrix::identity(3)), Error);
}

TEST(Ensembles, CueConjugationInvarianceKs) {
  const int dim = 30, draws = 300;
  const EnsembleSpec spec{EnsembleKind::CUE, dim, 17};
  RngStream vs(99, 0);
  const auto v = sample_cue(spec, vs);
  std::vector<double> a, b;
  for (int i = 0; i < draws; ++i) {
    RngStream s1(17, i), s2(18, i);
    for (double p : spectrum_of(spec, sample(spec, s1)).values) a.push_back(p);
    auto u = v * sample(spec, s2) * v.adjoint();
    for (double p : unitary_eigenphases(u).values) b.push_back(p);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double dmax = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) ++i;
    else ++j;
    dmax = std::max(dmax, std::abs(double(i) / a.size() - double(j) / b.size()));
  }
  const double n = a.size() * b.size() / double(a.size() + b.size());
  EXPECT_LT(dmax * std::sqrt(n), 1.63);  // 1% critical value
}
