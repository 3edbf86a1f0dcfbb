#pragma once

#include <cstdint>
#include <string>

#include "sffkit/linalg.hpp"
#include "sffkit/matrix.hpp"
#include "sffkit/rng.hpp"

namespace sffkit {

enum class EnsembleKind { CUE, GUE };

// GUE Heisenberg time: pi D / 2 by default, 2 D on request.
enum class ThConvention { Default, TwoD };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::CUE;
  int dim = 1;
  std::uint64_t master_seed = 0;
};

struct HeisenbergTime {
  double value = 1.0;
};

HeisenbergTime heisenberg_time(EnsembleKind kind, int dim, ThConvention conv = ThConvention::Default);

const char* to_string(EnsembleKind kind);
EnsembleKind parse_ensemble(const std::string& s);
const char* to_string(ThConvention conv);
ThConvention parse_th_convention(const std::string& s);

// Haar unitary from Ginibre + QR with the R-diagonal phase correction.
ComplexMatrix sample_cue(const EnsembleSpec& spec, RngStream& stream);
// P(H) ~ exp(-(D/2) tr H^2).
ComplexMatrix sample_gue(const EnsembleSpec& spec, RngStream& stream);
ComplexMatrix sample(const EnsembleSpec& spec, RngStream& stream);

Spectrum spectrum_of(const EnsembleSpec& spec, const ComplexMatrix& m);

}  // namespace sffkit
