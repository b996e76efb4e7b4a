#include <doctest.h>

#include <cmath>

#include "planckian/gibbs.hpp"
#include "planckian/metrology.hpp"
#include "planckian/random_states.hpp"

using namespace planckian;

namespace {

HermitianOperator sigma_x_half() {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 0.5;
  x(1, 0) = 0.5;
  return HermitianOperator(x);
}

HermitianOperator qubit_h(double gap) {
  Vector v(2);
  v << 0.0, gap;
  return HermitianOperator::diagonal(v);
}

}  // namespace

TEST_CASE("transversal thermal QFI of a qubit") {
  // Populations (p, 1-p) with ln(p/(1-p)) = 1: the coherent term reduces to
  // (2p - 1)^2 = tanh^2(1/2).
  const double expected = std::tanh(0.5) * std::tanh(0.5);
  const double f = qfi_thermal(qubit_h(1.0), 1.0, Perturbation(sigma_x_half()));
  CHECK(f == doctest::Approx(expected).epsilon(1e-12));
  CHECK(f == doctest::Approx(0.213553).epsilon(1e-5));
}

TEST_CASE("diagonal thermal QFI equals the population variance") {
  StateSampler sampler(19);
  for (int i = 0; i < 10; ++i) {
    const int d = 2 + static_cast<int>(sampler.uniform(0, 2));
    // Ascending energies so population ordering matches component ordering.
    Vector e(d), x(d);
    double level = sampler.uniform(-1, 0);
    for (int k = 0; k < d; ++k) {
      e(k) = level;
      level += sampler.uniform(0.1, 1.0);
      x(k) = sampler.uniform(-1, 1);
    }
    const double beta = sampler.uniform(0.3, 2.0);
    HermitianOperator h = HermitianOperator::diagonal(e);
    Vector p = gibbs_populations(h, beta);
    double mean = 0, second = 0;
    for (int k = 0; k < d; ++k) {
      const double xk = beta * x(k);
      mean += p(k) * xk;
      second += p(k) * xk * xk;
    }
    const double f = qfi_thermal(h, beta, Perturbation(HermitianOperator::diagonal(x)));
    CHECK(f == doctest::Approx(second - mean * mean).epsilon(1e-10));
  }
}

TEST_CASE("finite-difference oracle agrees with the closed form") {
  StateSampler sampler(23);
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + static_cast<int>(sampler.uniform(0, 3));
    HermitianOperator h = sampler.gue(d);
    HermitianOperator x = sampler.direction(d);
    const double beta = sampler.uniform(0.3, 1.5);
    const double closed = qfi_thermal(h, beta, Perturbation(x));
    auto family = [&](double theta) {
      return gibbs_state(HermitianOperator(h.entries() + theta * x.entries()), beta);
    };
    const double fd = qfi_finite_difference(family, 0.0, 1e-3);
    CHECK(fd == doctest::Approx(closed).epsilon(1e-4));
  }
}

TEST_CASE("locally-exact bound values") {
  CoarseGraining cg;
  cg.p_star = 2.0 / 3.0;
  CHECK(chi_tilde_diagonal(cg) == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-12));
  CHECK(chi_tilde_qubit(0.5) == doctest::Approx(0.5).epsilon(1e-12));
  // Series branch is continuous against the direct formula.
  CHECK(chi_tilde_qubit(0.5 + 5e-7) ==
        doctest::Approx(chi_tilde_qubit(0.5 + 2e-6)).epsilon(1e-9));
  CHECK_THROWS_AS(chi_tilde_qubit(0.0), Error);

  // Qubit coherent pairing reproduces the qubit optimum.
  const double p = 1.0 / (1.0 + std::exp(-1.0));
  Vector pops(2);
  pops << p, 1.0 - p;
  CHECK(chi_tilde_coherent(pops, {{0, 1}}) ==
        doctest::Approx(chi_tilde_qubit(p)).epsilon(1e-12));

  // Equal populations hit the analytic limit sqrt(p/2) for one pair.
  Vector eq(2);
  eq << 0.5, 0.5;
  CHECK(chi_tilde_coherent(eq, {{0, 1}}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(chi_tilde_coherent(eq, {{0, 0}}), DimError);
}

TEST_CASE("best bipartition is exhaustive for small dimensions") {
  Vector p3(3);
  p3 << 0.5, 0.3, 0.2;
  CoarseGraining best = best_bipartition(p3);
  CHECK(best.p_star == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(best.optimal);

  // Cross-check against an explicit subset scan on random populations.
  StateSampler sampler(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 4 + static_cast<int>(sampler.uniform(0, 4));
    Vector p(d);
    double z = 0;
    for (int k = 0; k < d; ++k) {
      p(k) = sampler.uniform(0.01, 1.0);
      z += p(k);
    }
    p /= z;
    double brute = -1;
    for (uint32_t mask = 1; mask < (1u << d) - 1; ++mask) {
      double w = 0;
      for (int k = 0; k < d; ++k)
        if (mask & (1u << k)) w += p(k);
      brute = std::max(brute, w * (1 - w));
    }
    CoarseGraining cg = best_bipartition(p);
    CHECK(cg.p_star * (1 - cg.p_star) == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_CASE("dynamical QFI bounds") {
  CHECK(heisenberg_qfi_bound(2.0, Perturbation(sigma_x_half())) ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(k_separable_qfi_bound(2.0, 1, 4, 1.0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(k_separable_qfi_bound(1.0, 2, 4, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(k_separable_qfi_bound(1.0, 5, 4, 1.0), Error);
}
