#pragma once

#include <Eigen/Dense>
#include <complex>

#include "planckian/errors.hpp"

namespace planckian {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;

// Units: hbar = k_B = 1 throughout. Energies carry units of 1/time,
// inverse temperatures beta carry units of time (tau_Pl = beta).

/// Hermitian matrix wrapper. Construction validates Hermiticity to 1e-12.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

  static HermitianOperator diagonal(const Vector& energies);
  static HermitianOperator zero(int dim);

 private:
  Matrix entries_;
};

/// Unit-trace positive-semidefinite matrix wrapper.
/// Hermitian to 1e-12, trace 1 to 1e-10, eigenvalues >= -1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

  static DensityMatrix diagonal(const Vector& populations);
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

 private:
  Matrix entries_;
};

/// Eigendecomposition A = U diag(values) U^dagger, values ascending.
struct Spectrum {
  Vector eigenvalues;
  Matrix eigenvectors;  // columns
};

Spectrum hermitian_eig(const HermitianOperator& a);
Spectrum hermitian_eig(const Matrix& a);

/// lambda_max - lambda_min; the natural norm on Hamiltonians modulo
/// identity shifts.
double spectral_seminorm(const HermitianOperator& a);
double spectral_seminorm(const Matrix& a);

}  // namespace planckian
