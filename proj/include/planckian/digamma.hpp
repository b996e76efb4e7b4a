#pragma once

#include <complex>

#include "planckian/errors.hpp"

namespace planckian {

/// Complex digamma psi(z) = d/dz ln Gamma(z).
/// Reflection for Re z < 1/2, upward recurrence until |z| >= 10, then the
/// Bernoulli asymptotic series; absolute error < 1e-12 on the shifted
/// domain. Throws PoleError at nonpositive integers.
std::complex<double> digamma_complex(std::complex<double> z);

}  // namespace planckian
