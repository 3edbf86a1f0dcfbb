#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sffkit {

using cplx = std::complex<double>;

// Structure tag set by trusted producers (samplers). Untagged matrices are
// validated by the solvers that need the property.
enum class Structure { General, Hermitian, Unitary };

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<cplx>& d);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  cplx* row(std::size_t i) { return data_.data() + i * dim_; }
  const cplx* row(std::size_t i) const { return data_.data() + i * dim_; }
  const std::vector<cplx>& data() const { return data_; }

  Structure structure() const { return structure_; }
  void mark(Structure s) { structure_ = s; }

  double max_abs() const;
  bool all_finite() const;
  ComplexMatrix adjoint() const;
  cplx trace() const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
  Structure structure_ = Structure::General;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// max |A_ij - conj(A_ji)|
double hermiticity_defect(const ComplexMatrix& a);
// max |A A^dagger - I|
double unitarity_defect(const ComplexMatrix& a);

}  // namespace sffkit
