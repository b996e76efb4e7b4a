#include "planckian/bures.hpp"

#include <algorithm>
#include <cmath>

namespace planckian {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimError("fidelity: dimension mismatch");
  }
  // sqrt(sigma) via eigendecomposition, then spectrum of sqrt(sigma) rho sqrt(sigma).
  Spectrum ss = hermitian_eig(sigma.entries());
  Vector sqrt_lam(ss.eigenvalues.size());
  for (Eigen::Index i = 0; i < sqrt_lam.size(); ++i) {
    double lam = ss.eigenvalues(i);
    if (lam < -1e-10) throw InvalidOperator("fidelity: sigma eigenvalue below -1e-10");
    sqrt_lam(i) = std::sqrt(std::max(0.0, lam));
  }
  Matrix sqrt_sigma = ss.eigenvectors *
                      sqrt_lam.asDiagonal().toDenseMatrix().cast<Complex>() *
                      ss.eigenvectors.adjoint();
  Matrix m = sqrt_sigma * rho.entries() * sqrt_sigma;
  Spectrum sm = hermitian_eig(m);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < sm.eigenvalues.size(); ++i) {
    double lam = sm.eigenvalues(i);
    if (lam < -1e-10) throw NumericalInstability("fidelity: inner eigenvalue below -1e-10");
    sum += std::sqrt(std::max(0.0, lam));
  }
  return clamp01(sum * sum);
}

double bures_angle(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::acos(clamp01(std::sqrt(fidelity(rho, sigma))));
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  double sf = clamp01(std::sqrt(fidelity(rho, sigma)));
  return std::sqrt(2.0 * (1.0 - sf));
}

double bures_angle_diag_qubit(double p, double q) {
  double sf = std::sqrt(clamp01(p) * clamp01(q)) +
              std::sqrt(clamp01(1.0 - p) * clamp01(1.0 - q));
  return std::acos(clamp01(sf));
}

}  // namespace planckian
