#pragma once

#include <array>
#include <span>
#include <vector>

namespace sffkit {

struct KernelSpec {
  double rho_bar = 1.0;
  int dim = 1;
};

// rho_bar = D / 2 pi
KernelSpec cue_kernel_spec(int dim);

double kernel_value(const KernelSpec& spec, double x);
// det[K(x_i - x_j)], n <= 6
double r_n_det(const KernelSpec& spec, std::span<const double> points);

struct BoxProduct {
  std::vector<double> weights;
  int dim = 1;
};

struct BoxResult {
  double value = 0.0;
  bool on_shell = false;
};

// Overlap of the unit box with the boxes shifted by the partial sums / 2D.
BoxResult box_convolution(const BoxProduct& bp);

// Closed cycle K(1,2)K(2,3)...K(m,1) against exp(i sum w_l lambda_l) for the
// CUE kernel, w in units of integer time. Zero off-shell.
double cue_cycle_integral(std::span<const double> weights, int dim);

// Integral of R_n against exp(i sum w_l lambda_l), expanding the determinant
// over permutations into products of cycle integrals. n <= 6.
double cue_rn_integral(std::span<const double> weights, int dim);

struct IdentityPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

IdentityPair three_type_identity(double t, int dim);
// cycles (1 3 2 4), (1 2 3 4), (1 2 4 3) against weights (t, t, -t, -t)
std::array<IdentityPair, 3> four_type_identities(double t, int dim);

double assemble_sff2(double t, int dim);

}  // namespace sffkit
