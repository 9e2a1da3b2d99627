// linalg.hpp — small dense complex matrices, Hermitian Jacobi eigensolver,
// one-sided Jacobi SVD. Sized for density matrices up to 16x16.
#pragma once

#include <complex>
#include <vector>

namespace entdyn {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static ComplexMatrix identity(int n);

  int dim() const { return n_; }
  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix adjoint() const;

  Complex trace() const;
  double frobenius_norm() const;
  // max |a_ij - conj(a_ji)|
  double hermiticity_defect() const;

 private:
  int n_ = 0;
  std::vector<Complex> a_;
};

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are the eigenvectors, same order
};

// Cyclic complex Jacobi rotations; input is symmetrized as (A + A^dag)/2.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

// Singular values in descending order, one-sided Jacobi on the columns.
std::vector<double> singular_values(const ComplexMatrix& a);

}  // namespace entdyn
