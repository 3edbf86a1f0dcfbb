#pragma once

#include <array>
#include <complex>
#include <string>

namespace sffkit {

enum class SaddleKind { Identity, SingleTransposition, DoubleTransposition };

struct SaddleConfig {
  std::array<int, 4> sigma{1, 2, 3, 4};  // images of 1..4
  SaddleKind kind = SaddleKind::Identity;
  std::string name = "I";
};

// Rows of the saddle table: I, T13, T14, T23, T24, T14T23.
const std::array<SaddleConfig, 6>& saddle_table();
const SaddleConfig& saddle_by_name(const std::string& name);
// Throws unless cfg is one of the six table rows with a consistent kind.
void validate(const SaddleConfig& cfg);

using Phases = std::array<double, 4>;

struct PhasePoint {
  Phases phi{};
  Phases alpha{};
  int dim = 1;
  Phases deltas{0.1, 0.2, 0.1, 0.2};  // regulators, 0 < d1 < d2, 0 < d3 < d4
  double pole_guard = 1e-6;
};

std::complex<double> z_saddle(const SaddleConfig& cfg, const PhasePoint& p);
std::complex<double> f_closed(const SaddleConfig& cfg, const Phases& phi, int dim, double pole_guard = 1e-6);

struct NumericDerivative {
  std::complex<double> value;   // Richardson combination
  std::complex<double> coarse;  // step h
  std::complex<double> fine;    // step h / 2
  double step = 0.0;
};

// Mixed fourth alpha-derivative at alpha = 0 from 16-point central
// differences with one Richardson halving. step <= 0 picks 1e-2 min|phi_i - phi_j|.
NumericDerivative f_numeric_detail(const SaddleConfig& cfg, const Phases& phi, int dim, double step = 0.0);
std::complex<double> f_numeric(const SaddleConfig& cfg, const Phases& phi, int dim, double step = 0.0);

struct TimeDomainMoment {
  double disconnected = 0.0;
  double connected = 0.0;
  double sum() const { return disconnected + connected; }
};

TimeDomainMoment sff2_timedomain(double tau, int dim);

}  // namespace sffkit
