#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sffkit/analytics.hpp"
#include "sffkit/error.hpp"

using namespace sffkit;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr auto CUE = EnsembleKind::CUE;
constexpr auto GUE = EnsembleKind::GUE;
}  // namespace

TEST(Z, CueRampPlateau) {
  EXPECT_EQ(z_cue(0.5), 0.5);
  EXPECT_EQ(z_cue(2.0), 1.0);
  EXPECT_EQ(z_cue(0.0), 0.0);
  EXPECT_THROW(z_cue(-0.1), Error);
}

TEST(Z, GueEndpoints) {
  EXPECT_EQ(z_gue(0.0, 10), 0.0);
  const double th = 5 * kPi;
  EXPECT_NEAR(z_gue(4 / kPi * th, 10), 1.0, 1e-15);
  EXPECT_NEAR(z_gue(4 / kPi * th * (1 - 1e-12), 10), 1.0, 1e-5);
  EXPECT_EQ(z_gue(1e3, 10), 1.0);
}

TEST(Z, GueFrozenHighPrecision) {
  EXPECT_NEAR(z_gue(0.5 * 5 * kPi, 10), 0.48683396367962381509, 1e-15);
  EXPECT_NEAR(z_gue(3.0, 7), 0.27073438352781250542, 1e-15);
}

TEST(Z, GueTwoDConvention) {
  EXPECT_NEAR(z_value(GUE, 10.0, 10, ThConvention::TwoD), z_gue_th(10.0, 20.0), 0);
  EXPECT_NEAR(z_value(CUE, 5.0, 10), 0.5, 0);
}

TEST(Ubar, Values) {
  EXPECT_EQ(ubar(CUE, 5, 10), cplx(0.0));
  EXPECT_EQ(ubar(CUE, 0, 10), cplx(10.0));
  EXPECT_THROW(ubar(CUE, 0.5, 10), Error);
  EXPECT_NEAR(ubar(GUE, 1e-9, 10).real(), 10.0, 1e-9);
  EXPECT_NEAR(std::abs(ubar(GUE, 1.9158529851037561578, 10)), 0.0, 1e-9);
  EXPECT_NEAR(ubar(GUE, 0.7, 10).real(), 7.7421101990122076165, 1e-12);
}

TEST(GaussianMoment, Values) {
  EXPECT_EQ(gaussian_moment(1, 10, 0.3), 3.0);
  EXPECT_NEAR(gaussian_moment(3, 4, 0.5), 48.0, 1e-12);
  EXPECT_NEAR(gaussian_moment(2, 10, 1.0), 200.0, 1e-12);
  try {
    gaussian_moment(21, 2, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Overflow);
  }
}

TEST(Conn2, CuePiecewise) {
  EXPECT_NEAR(conn2(CUE, 5, 20), 0.0, 1e-15);
  EXPECT_NEAR(conn2(CUE, 15, 20), -0.5, 1e-15);
  EXPECT_NEAR(conn2(CUE, 30, 20), -1.0, 1e-15);
}

TEST(Sff2Exact, CueRegions) {
  EXPECT_NEAR(sff2_exact(CUE, 5, 20, true), 50.0, 1e-12);
  EXPECT_NEAR(sff2_exact(CUE, 20, 20, true), 780.0, 1e-12);
  EXPECT_NEAR(sff2_exact(CUE, 40, 20, true), 780.0, 1e-12);
  EXPECT_NEAR(sff2_exact(CUE, 7.5, 10, false), 107.5, 1e-12);
}

TEST(Sff2Exact, CueTimeZeroKeepsMeanTraceTerms) {
  const double d = 6;
  EXPECT_NEAR(sff2_exact(CUE, 0, 6, true), d * d * d * d + 2 * d * d * d - 3 * d * d, 1e-9);
  EXPECT_EQ(sff2_exact(CUE, 0, 6, false), 0.0);
}

TEST(Envelope, Values) {
  EXPECT_NEAR(sampling_envelope(1, 10, 0.3, 100.0), 3.0 / 10.0, 1e-15);
  EXPECT_NEAR(sampling_envelope(2, 1, 1.0, 4.0), std::sqrt(20.0) / 2, 1e-14);
  EXPECT_EQ(sampling_envelope(2, 10, 0.0, 4.0), 0.0);
  EXPECT_NEAR(conn2_envelope(100, 0.5, 20.0), 25.0 / std::sqrt(20.0), 1e-13);
}

TEST(Scba, ClosedFormValues) {
  const auto s0 = scba_closed_form(0.0, 7);
  EXPECT_EQ(s0.sigma, 1.0);
  EXPECT_NEAR(s0.density, 7 / kPi, 1e-15);
  EXPECT_EQ(scba_closed_form(2.0).sigma, 0.0);
  EXPECT_NEAR(scba_closed_form(1.0).sigma, std::sqrt(3.0) / 2, 1e-15);
}

TEST(Scba, IterationMatchesClosedForm) {
  for (int k = 0; k < 100; ++k) {
    const double lam = -2.0 + 4.0 * k / 99.0;
    const auto s = scba_solve(lam, 50);
    const auto c = scba_closed_form(lam, 50);
    EXPECT_LT(std::abs(s.gbar_plus - c.gbar_plus), 1e-10) << lam;
    EXPECT_NEAR(s.density, semicircle_density(lam, 50), 1e-8) << lam;
  }
}

TEST(Scba, BandEdgeAndOutside) {
  EXPECT_EQ(scba_solve(2.0).sigma, 0.0);
  EXPECT_EQ(scba_solve(-2.0).gbar_plus, cplx(-1.0));
  try {
    scba_solve(2.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsideSupport);
  }
  EXPECT_THROW(scba_solve(std::nan("")), Error);
}

TEST(PerturbativeRhoC, Values) {
  EXPECT_NEAR(perturbative_rho_c(1 / kPi, 0.0), -0.5, 1e-15);
  EXPECT_EQ(perturbative_rho_c(0.3, 0.2), perturbative_rho_c(0.2, 0.3));
  EXPECT_NEAR(perturbative_rho_c(0.1, 0.0), -1 / (2 * kPi * kPi * 0.01), 1e-12);
  EXPECT_THROW(perturbative_rho_c(0.1, 0.1), Error);
}

TEST(Predict, CurveColumns) {
  const auto g = TimeGrid::from_times(CUE, 10, {0, 5, 15});
  const auto p = predict(g);
  EXPECT_EQ(p.z, (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_NEAR(p.gaussian[3][1], 24 * 625.0, 1e-9);
  EXPECT_NEAR(p.sff2_exact[2], 190.0, 1e-12);
  EXPECT_NEAR(p.sff2_approx[1] - p.gaussian[1][1], 10 * p.conn2[1], 1e-12);
  EXPECT_EQ(p.ubar[0], cplx(10.0));
}
