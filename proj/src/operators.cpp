#include "planckian/operators.hpp"

#include <Eigen/Eigenvalues>

namespace planckian {

namespace {

void check_square(const Matrix& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw DimError(std::string(what) + ": matrix must be square with dim >= 1");
  }
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix entries) : entries_(std::move(entries)) {
  check_square(entries_, "HermitianOperator");
  if (hermiticity_defect(entries_) > 1e-12) {
    throw InvalidOperator("HermitianOperator: entries not Hermitian within 1e-12");
  }
  // Symmetrize away representation-level rounding.
  entries_ = 0.5 * (entries_ + entries_.adjoint().eval());
}

HermitianOperator HermitianOperator::diagonal(const Vector& energies) {
  Matrix m = Matrix::Zero(energies.size(), energies.size());
  for (Eigen::Index i = 0; i < energies.size(); ++i) m(i, i) = energies(i);
  return HermitianOperator(std::move(m));
}

HermitianOperator HermitianOperator::zero(int dim) {
  return HermitianOperator(Matrix::Zero(dim, dim));
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  check_square(entries_, "DensityMatrix");
  if (hermiticity_defect(entries_) > 1e-12) {
    throw InvalidOperator("DensityMatrix: entries not Hermitian within 1e-12");
  }
  entries_ = 0.5 * (entries_ + entries_.adjoint().eval());
  const double tr = entries_.trace().real();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw InvalidOperator("DensityMatrix: trace differs from 1 beyond 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw InvalidOperator("DensityMatrix: negative eigenvalue beyond 1e-10");
  }
}

DensityMatrix DensityMatrix::diagonal(const Vector& populations) {
  Matrix m = Matrix::Zero(populations.size(), populations.size());
  for (Eigen::Index i = 0; i < populations.size(); ++i) m(i, i) = populations(i);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  Eigen::VectorXcd n = psi / psi.norm();
  return DensityMatrix(n * n.adjoint());
}

Spectrum hermitian_eig(const Matrix& a) {
  check_square(a, "hermitian_eig");
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff())) {
    throw InvalidOperator("hermitian_eig: input not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (a + a.adjoint().eval()));
  if (es.info() != Eigen::Success) {
    throw NumericalInstability("hermitian_eig: eigensolver failed");
  }
  return Spectrum{es.eigenvalues(), es.eigenvectors()};
}

Spectrum hermitian_eig(const HermitianOperator& a) { return hermitian_eig(a.entries()); }

double spectral_seminorm(const Matrix& a) {
  Spectrum s = hermitian_eig(a);
  return s.eigenvalues(s.eigenvalues.size() - 1) - s.eigenvalues(0);
}

double spectral_seminorm(const HermitianOperator& a) { return spectral_seminorm(a.entries()); }

}  // namespace planckian
