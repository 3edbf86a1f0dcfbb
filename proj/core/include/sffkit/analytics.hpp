#pragma once

#include <complex>
#include <vector>

#include "sffkit/time_grid.hpp"

namespace sffkit {

double z_cue(double tau);
double z_gue(double t, int dim);
// Same formula for an explicit Heisenberg time.
double z_gue_th(double t, double t_heisenberg);
double z_value(EnsembleKind kind, double t, int dim, ThConvention conv = ThConvention::Default);

cplx ubar(EnsembleKind kind, double t, int dim);
double gaussian_moment(int n, int dim, double z);
double conn2(EnsembleKind kind, double t, int dim, ThConvention conv = ThConvention::Default);
double sff2_exact(EnsembleKind kind, double t, int dim, bool include_ubar,
                  ThConvention conv = ThConvention::Default);
double sampling_envelope(int n, int dim, double z, double n_sim);
// Fluctuation amplitude D z^2 / sqrt(N) of (E[SFF^2] - 2 E[SFF]^2) / D.
double conn2_envelope(int dim, double z, double n_sim);

struct ScbaSolution {
  double lambda = 0.0;
  double sigma = 0.0;
  cplx gbar_plus;
  double density = 0.0;
  int iterations = 0;
};

ScbaSolution scba_solve(double lambda, int dim = 1);
ScbaSolution scba_closed_form(double lambda, int dim = 1);
double semicircle_density(double lambda, int dim);
double perturbative_rho_c(double lambda1, double lambda2);

struct PredictionCurve {
  TimeGrid grid;
  std::vector<double> z;
  std::vector<double> conn2;
  std::vector<std::vector<double>> gaussian;  // [n-1][j], n = 1..4
  std::vector<cplx> ubar;
  std::vector<double> sff2_exact;   // with ubar terms
  std::vector<double> sff2_approx;  // 2 D^2 z^2 + D conn2

  // sampling_envelope(n, D, z_j, n_sim)
  double envelope(int n, std::size_t j, double n_sim) const;
};

PredictionCurve predict(const TimeGrid& grid);

}  // namespace sffkit
