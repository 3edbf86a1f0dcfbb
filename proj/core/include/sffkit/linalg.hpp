#pragma once

#include <vector>

#include "sffkit/matrix.hpp"

namespace sffkit {

enum class SpectrumKind { CuePhases, GueValues };

struct Spectrum {
  SpectrumKind kind = SpectrumKind::GueValues;
  std::vector<double> values;  // ascending; phases in (-pi, pi]
};

struct QrResult {
  ComplexMatrix q;
  ComplexMatrix r;
};

QrResult householder_qr(const ComplexMatrix& a);

// Householder tridiagonalization, then implicit QL on the real tridiagonal.
Spectrum hermitian_eigenvalues(const ComplexMatrix& h);

// Hessenberg reduction, then Wilkinson-shifted complex QR to Schur form.
Spectrum unitary_eigenphases(const ComplexMatrix& u);

// Eigenvalues of a general complex matrix via the same Schur iteration.
std::vector<cplx> schur_eigenvalues(const ComplexMatrix& a);

}  // namespace sffkit
