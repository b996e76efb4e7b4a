#include "planckian/gibbs.hpp"

#include <cmath>

namespace planckian {

namespace {

Vector populations_from_energies(const Vector& energies, double beta) {
  const Eigen::Index d = energies.size();
  Vector p(d);
  if (std::isinf(beta)) {
    // Ground-space projector, uniform over degeneracy.
    const double e0 = energies(0);
    const double spread = energies(d - 1) - e0;
    const double tol = 1e-10 * std::max(1.0, spread);
    int count = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (energies(i) - e0 <= tol) ++count;
    }
    for (Eigen::Index i = 0; i < d; ++i) {
      p(i) = (energies(i) - e0 <= tol) ? 1.0 / count : 0.0;
    }
    return p;
  }
  if (!(beta >= 0)) throw Error("gibbs_state: beta must be non-negative");
  if (beta == 0.0) {
    p.setConstant(1.0 / static_cast<double>(d));
    return p;
  }
  // Shift by the ground energy so exponentials never overflow.
  const double e0 = energies(0);
  double z = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    p(i) = std::exp(-beta * (energies(i) - e0));
    z += p(i);
  }
  p /= z;
  return p;
}

}  // namespace

Vector gibbs_populations(const HermitianOperator& h, double beta) {
  Spectrum s = hermitian_eig(h);
  return populations_from_energies(s.eigenvalues, beta);
}

DensityMatrix gibbs_state(const HermitianOperator& h, double beta) {
  Spectrum s = hermitian_eig(h);
  Vector p = populations_from_energies(s.eigenvalues, beta);
  Matrix rho = s.eigenvectors * p.asDiagonal().toDenseMatrix().cast<Complex>() *
               s.eigenvectors.adjoint();
  return DensityMatrix(std::move(rho));
}

}  // namespace planckian
