#include "sffkit/ensembles.hpp"

#include <cmath>
#include <numbers>

#include "sffkit/error.hpp"

namespace sffkit {

HeisenbergTime heisenberg_time(EnsembleKind kind, int dim, ThConvention conv) {
  if (dim < 1) throw Error(ErrorCode::InvalidParameter, "dimension must be >= 1");
  if (kind == EnsembleKind::CUE) return {static_cast<double>(dim)};
  if (conv == ThConvention::TwoD) return {2.0 * dim};
  return {std::numbers::pi * dim / 2.0};
}

const char* to_string(EnsembleKind kind) { return kind == EnsembleKind::CUE ? "cue" : "gue"; }

EnsembleKind parse_ensemble(const std::string& s) {
  if (s == "cue" || s == "CUE") return EnsembleKind::CUE;
  if (s == "gue" || s == "GUE") return EnsembleKind::GUE;
  throw Error(ErrorCode::Config, "unknown ensemble '" + s + "' (expected cue or gue)");
}

const char* to_string(ThConvention conv) { return conv == ThConvention::Default ? "default" : "2d"; }

ThConvention parse_th_convention(const std::string& s) {
  if (s == "default") return ThConvention::Default;
  if (s == "2d" || s == "2D") return ThConvention::TwoD;
  throw Error(ErrorCode::Config, "unknown t_H convention '" + s + "' (expected default or 2d)");
}

ComplexMatrix sample_cue(const EnsembleSpec& spec, RngStream& stream) {
  if (spec.kind != EnsembleKind::CUE) throw Error(ErrorCode::InvalidInput, "sample_cue: spec is not CUE");
  const std::size_t n = static_cast<std::size_t>(spec.dim);
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = complex_gaussian(stream, 1.0);
  auto [q, r] = householder_qr(g);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    const double ad = std::abs(d);
    const cplx ph = ad > 0.0 ? d / ad : cplx(1.0);
    for (std::size_t i = 0; i < n; ++i) q(i, j) *= ph;
  }
  q.mark(Structure::Unitary);
  return q;
}

ComplexMatrix sample_gue(const EnsembleSpec& spec, RngStream& stream) {
  if (spec.kind != EnsembleKind::GUE) throw Error(ErrorCode::InvalidInput, "sample_gue: spec is not GUE");
  const std::size_t n = static_cast<std::size_t>(spec.dim);
  const double var = 1.0 / spec.dim;
  const double sd = std::sqrt(var);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = sd * stream.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx z = complex_gaussian(stream, var);
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  h.mark(Structure::Hermitian);
  return h;
}

ComplexMatrix sample(const EnsembleSpec& spec, RngStream& stream) {
  return spec.kind == EnsembleKind::CUE ? sample_cue(spec, stream) : sample_gue(spec, stream);
}

Spectrum spectrum_of(const EnsembleSpec& spec, const ComplexMatrix& m) {
  if (m.dim() != static_cast<std::size_t>(spec.dim)) {
    throw Error(ErrorCode::InvalidInput, "spectrum_of: matrix dimension does not match spec");
  }
  if (spec.kind == EnsembleKind::CUE) {
    if (m.structure() == Structure::Hermitian) {
      throw Error(ErrorCode::InvalidInput, "spectrum_of: Hermitian matrix given for CUE");
    }
    return unitary_eigenphases(m);
  }
  if (m.structure() == Structure::Unitary) {
    throw Error(ErrorCode::InvalidInput, "spectrum_of: unitary matrix given for GUE");
  }
  return hermitian_eigenvalues(m);
}

}  // namespace sffkit
