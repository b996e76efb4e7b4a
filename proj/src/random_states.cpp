#include "planckian/random_states.hpp"

namespace planckian {

DensityMatrix StateSampler::ginibre(int dim) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss_(rng_), gauss_(rng_));
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

HermitianOperator StateSampler::gue(int dim) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss_(rng_), gauss_(rng_));
  return HermitianOperator(0.5 * (g + g.adjoint().eval()));
}

HermitianOperator StateSampler::direction(int dim) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    HermitianOperator h = gue(dim);
    double n = spectral_seminorm(h);
    if (n > 1e-8) return HermitianOperator(h.entries() / n);
  }
  throw NumericalInstability("StateSampler::direction: degenerate draws");
}

double StateSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

}  // namespace planckian
