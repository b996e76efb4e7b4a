#include "planckian/digamma.hpp"

#include <cmath>
#include <numbers>

namespace planckian {

namespace {

using Cplx = std::complex<double>;

// psi(z) ~ ln z - 1/(2z) - sum_n B_{2n} / (2n z^{2n}), valid for |z| >= 10.
Cplx digamma_asymptotic(Cplx z) {
  static constexpr double coeff[] = {
      1.0 / 12.0,   -1.0 / 120.0,    1.0 / 252.0,  -1.0 / 240.0,
      1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
  };
  const Cplx inv2 = 1.0 / (z * z);
  Cplx term = inv2;
  Cplx sum = 0.0;
  for (double c : coeff) {
    sum += c * term;
    term *= inv2;
  }
  return std::log(z) - 0.5 / z - sum;
}

}  // namespace

Cplx digamma_complex(Cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError("digamma_complex: pole at nonpositive integer");
  }
  Cplx result = 0.0;
  if (z.real() < 0.5) {
    // psi(z) = psi(1 - z) - pi cot(pi z)
    const Cplx pz = std::numbers::pi * z;
    result -= std::numbers::pi / std::tan(pz);
    z = 1.0 - z;
  }
  while (std::abs(z) < 10.0) {
    result -= 1.0 / z;
    z += 1.0;
  }
  return result + digamma_asymptotic(z);
}

}  // namespace planckian
