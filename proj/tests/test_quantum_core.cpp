#include <doctest.h>

#include <cmath>

#include "planckian/bures.hpp"
#include "planckian/dynamics.hpp"
#include "planckian/gibbs.hpp"
#include "planckian/operators.hpp"
#include "planckian/random_states.hpp"

using namespace planckian;

namespace {

HermitianOperator qubit_h(double e0, double e1) {
  Vector v(2);
  v << e0, e1;
  return HermitianOperator::diagonal(v);
}

}  // namespace

TEST_CASE("operator validation") {
  Matrix bad(2, 2);
  bad << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(HermitianOperator{bad}, InvalidOperator);

  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, InvalidOperator);

  Matrix off_trace = 0.7 * Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{off_trace}, InvalidOperator);
}

TEST_CASE("spectral seminorm ignores identity shifts") {
  StateSampler sampler(11);
  for (int i = 0; i < 20; ++i) {
    HermitianOperator a = sampler.gue(3);
    const double base = spectral_seminorm(a);
    Matrix shifted = a.entries() + 2.7 * Matrix::Identity(3, 3);
    CHECK(spectral_seminorm(shifted) == doctest::Approx(base).epsilon(1e-12));
  }
  CHECK(spectral_seminorm(qubit_h(0.0, 1.0)) == doctest::Approx(1.0));
}

TEST_CASE("gibbs state limits and invariance") {
  const auto h = qubit_h(0.0, 1.0);
  Vector p = gibbs_populations(h, 1.0);
  const double z = 1.0 + std::exp(-1.0);
  CHECK(p(0) == doctest::Approx(1.0 / z).epsilon(1e-12));
  CHECK(p(1) == doctest::Approx(std::exp(-1.0) / z).epsilon(1e-12));

  // beta -> 0: maximally mixed; beta -> inf: ground projector.
  Vector p0 = gibbs_populations(h, 0.0);
  CHECK(p0(0) == doctest::Approx(0.5));
  Vector pinf = gibbs_populations(h, std::numeric_limits<double>::infinity());
  CHECK(pinf(0) == doctest::Approx(1.0));
  CHECK(pinf(1) == doctest::Approx(0.0));

  // Degenerate ground space splits the weight uniformly.
  Vector deg(3);
  deg << 0.0, 0.0, 1.0;
  Vector pd = gibbs_populations(HermitianOperator::diagonal(deg),
                                std::numeric_limits<double>::infinity());
  CHECK(pd(0) == doctest::Approx(0.5));
  CHECK(pd(1) == doctest::Approx(0.5));

  // Identity shifts leave the state untouched; huge beta must not overflow.
  Matrix shifted = h.entries() - 100.0 * Matrix::Identity(2, 2);
  DensityMatrix a = gibbs_state(h, 2.0);
  DensityMatrix b = gibbs_state(HermitianOperator(shifted), 2.0);
  CHECK((a.entries() - b.entries()).norm() < 1e-12);
  Vector phuge = gibbs_populations(h, 1e4);
  CHECK(std::isfinite(phuge(1)));
}

TEST_CASE("qubit Gibbs pair fidelity and Bures angle") {
  DensityMatrix w1 = gibbs_state(qubit_h(0.0, 0.0), 1.0);  // E = 0 -> mixed 1/2
  DensityMatrix w2 = gibbs_state(qubit_h(0.0, 1.0), 1.0);
  const double f = fidelity(w1, w2);
  CHECK(f == doctest::Approx(0.943408).epsilon(1e-5));
  CHECK(bures_angle(w1, w2) == doctest::Approx(0.2401905395668648).epsilon(1e-9));
  CHECK(bures_angle(w1, w1) == doctest::Approx(0.0).scale(1).epsilon(1e-7));

  // Diagonal qubit closed form matches the general matrix route.
  const double p = 0.5, q = 1.0 / (1.0 + std::exp(-1.0));
  CHECK(bures_angle_diag_qubit(p, q) ==
        doctest::Approx(bures_angle(w1, w2)).epsilon(1e-10));
}

TEST_CASE("fidelity of pure states is the squared overlap") {
  Eigen::VectorXcd psi(2), phi(2);
  psi << 1.0, 0.0;
  phi << std::sqrt(0.3), std::sqrt(0.7);
  CHECK(fidelity(DensityMatrix::pure(psi), DensityMatrix::pure(phi)) ==
        doctest::Approx(0.3).epsilon(1e-7));
}

TEST_CASE("Bures angle metric axioms on random states") {
  StateSampler sampler(42);
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + static_cast<int>(sampler.uniform(0, 3));
    DensityMatrix r = sampler.ginibre(d), s = sampler.ginibre(d), t = sampler.ginibre(d);
    const double drs = bures_angle(r, s);
    const double dst = bures_angle(s, t);
    const double drt = bures_angle(r, t);
    CHECK(drs == doctest::Approx(bures_angle(s, r)).epsilon(1e-12));
    CHECK(drs >= 0.0);
    CHECK(drs <= std::acos(-1.0) / 2 + 1e-12);
    CHECK(drt <= drs + dst + 1e-9);  // triangle inequality
  }
}

TEST_CASE("data processing: partial trace contracts the Bures angle") {
  StateSampler sampler(7);
  for (int i = 0; i < 50; ++i) {
    DensityMatrix r = sampler.ginibre(4), s = sampler.ginibre(4);
    const double full = bures_angle(r, s);
    const double reduced = bures_angle(partial_trace(r, 2, 2, Subsystem::System),
                                       partial_trace(s, 2, 2, Subsystem::System));
    CHECK(reduced <= full + 1e-9);
  }
}

TEST_CASE("propagation matches the exact unitary for constant H") {
  StateSampler sampler(3);
  HermitianOperator h = sampler.gue(3);
  DensityMatrix rho = sampler.ginibre(3);
  auto sched = Schedule::piecewise_constant({{2.0, h}});
  DensityMatrix evolved = propagate(rho, sched, 1.3);
  Matrix u = unitary_step(h.entries(), 1.3);
  Matrix exact = u * rho.entries() * u.adjoint();
  CHECK((evolved.entries() - exact).norm() < 1e-10);
  CHECK_THROWS_AS(propagate(rho, sched, 2.5), ScheduleError);
}

TEST_CASE("partial trace of a product state returns its factors") {
  StateSampler sampler(5);
  DensityMatrix a = sampler.ginibre(2), b = sampler.ginibre(3);
  Matrix prod = Matrix::Zero(6, 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          prod(i * 3 + k, j * 3 + l) = a.entries()(i, j) * b.entries()(k, l);
  DensityMatrix rho(prod);
  CHECK((partial_trace(rho, 2, 3, Subsystem::System).entries() - a.entries()).norm() <
        1e-12);
  CHECK((partial_trace(rho, 2, 3, Subsystem::Machine).entries() - b.entries()).norm() <
        1e-12);
}
