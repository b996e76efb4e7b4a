#include "planckian/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "planckian/bures.hpp"

namespace planckian {

namespace {

// Populations and their logs from the spectrum of beta*H, computed from the
// shifted energies so that log p never underflows.
void thermal_populations(const Vector& energies, double beta, Vector* p, Vector* logp) {
  const Eigen::Index d = energies.size();
  const double e0 = energies(0);
  Vector w(d);
  double z = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    w(i) = std::exp(-beta * (energies(i) - e0));
    z += w(i);
  }
  const double logz = std::log(z);
  p->resize(d);
  logp->resize(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    (*p)(i) = w(i) / z;
    (*logp)(i) = -beta * (energies(i) - e0) - logz;
  }
}

// Off-diagonal QFI weight 2(p_i-p_j)^2 / ((ln p_i - ln p_j)^2 (p_i+p_j)),
// with the removable limit p at equal populations.
double offdiag_weight(double pi, double pj, double li, double lj) {
  if (std::abs(pi - pj) < 1e-9 * std::max(pi, pj)) return 0.5 * (pi + pj);
  const double dp = pi - pj;
  const double dl = li - lj;
  return 2.0 * dp * dp / (dl * dl * (pi + pj));
}

}  // namespace

double qfi_thermal(const HermitianOperator& h, double beta, const Perturbation& xprime) {
  if (std::isinf(beta)) {
    throw UnsupportedLimit("qfi_thermal: beta = inf not supported, use the oracle");
  }
  if (h.dim() != xprime.direction.dim()) throw DimError("qfi_thermal: dim mismatch");
  Spectrum s = hermitian_eig(h);
  Vector p, logp;
  thermal_populations(s.eigenvalues, beta, &p, &logp);
  // Adimensional convention X = beta H, so the perturbation enters as beta X'.
  Matrix xe = s.eigenvectors.adjoint() * (beta * xprime.direction.entries()) *
              s.eigenvectors;
  const Eigen::Index d = p.size();
  double mean = 0.0, second = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double xd = xe(i, i).real();
    mean += p(i) * xd;
    second += p(i) * xd * xd;
  }
  double qfi = second - mean * mean;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (i == j) continue;
      qfi += std::norm(xe(i, j)) * offdiag_weight(p(i), p(j), logp(i), logp(j));
    }
  }
  return std::max(0.0, qfi);
}

double qfi_finite_difference(const std::function<DensityMatrix(double)>& family,
                             double theta0, double h) {
  auto estimate = [&](double step) {
    const double d = bures_angle(family(theta0 - step), family(theta0 + step));
    return d * d / (step * step);
  };
  // Keep the probed angle well above the fidelity noise floor: for a tiny
  // angle the subtraction in 1 - F(rho_-, rho_+) loses all significant digits
  // and the quotient below is dominated by rounding noise.
  constexpr double kTargetAngle = 5e-3;
  const double probe =
      bures_angle(family(theta0 - h), family(theta0 + h));
  if (probe > 0.0 && probe < kTargetAngle) {
    h *= std::min(50.0, kTargetAngle / probe);
  }
  const double a1 = estimate(h);
  const double a2 = estimate(0.5 * h);
  if (std::abs(a1 - a2) > 1e-3 * std::max(a2, 1e-8)) {
    throw NumericalInstability("qfi_finite_difference: Richardson pair disagrees");
  }
  return std::max(0.0, (4.0 * a2 - a1) / 3.0);
}

double chi_tilde_diagonal(const CoarseGraining& cg) {
  return std::sqrt(std::max(0.0, cg.p_star * (1.0 - cg.p_star)));
}

double chi_tilde_coherent(const Vector& populations,
                          const std::vector<std::pair<int, int>>& pairs) {
  std::vector<bool> used(populations.size(), false);
  double sum = 0.0;
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= populations.size() || j >= populations.size() || i == j) {
      throw DimError("chi_tilde_coherent: bad pair index");
    }
    if (used[i] || used[j]) throw DimError("chi_tilde_coherent: pairs must be disjoint");
    used[i] = used[j] = true;
    const double pi = populations(i), pj = populations(j);
    if (std::abs(pi - pj) < 1e-9 * std::max(pi, pj)) {
      sum += 0.5 * 0.5 * (pi + pj);
    } else {
      const double dp = pi - pj;
      const double dl = std::log(pi) - std::log(pj);
      sum += dp * dp / (dl * dl * (pi + pj));
    }
  }
  return std::sqrt(sum);
}

double chi_tilde_qubit(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error("chi_tilde_qubit: p must be in (0,1)");
  const double u = 2.0 * p - 1.0;
  if (std::abs(u) < 1e-6) {
    // (2p-1)/ln(p/(1-p)) = u / (2 atanh(u)) -> 1/2 - u^2/6 + ...
    return 0.5 * (1.0 - u * u / 3.0);
  }
  return std::abs(u) / std::abs(std::log(p / (1.0 - p)));
}

CoarseGraining best_bipartition(const Vector& populations) {
  const int d = static_cast<int>(populations.size());
  CoarseGraining best;
  if (d == 1) {
    best.p_star = 1.0;
    best.q0 = populations(0);
    best.q1 = 0.0;
    best.block = {0};
    return best;
  }
  if (d <= 24) {
    // Exhaustive over subsets with element 0 fixed in the complement;
    // Gray-code walk keeps the running weight O(1) per step.
    const uint32_t limit = 1u << (d - 1);
    double best_score = -1.0;
    uint32_t best_mask = 0;
    double weight = 0.0;
    uint32_t prev_gray = 0;
    for (uint32_t k = 1; k < limit; ++k) {
      const uint32_t gray = k ^ (k >> 1);
      const uint32_t flipped = gray ^ prev_gray;
      const int bit = std::countr_zero(flipped);
      if (gray & flipped) {
        weight += populations(bit + 1);
      } else {
        weight -= populations(bit + 1);
      }
      prev_gray = gray;
      const double score = weight * (1.0 - weight);
      if (score > best_score + 1e-15) {
        best_score = score;
        best_mask = gray;
      }
    }
    double q0 = 0.0;
    for (int i = 1; i < d; ++i) {
      if (best_mask & (1u << (i - 1))) {
        best.block.push_back(i);
        q0 += populations(i);
      }
    }
    best.p_star = q0;
    best.q0 = q0;
    best.q1 = 1.0 - q0;
    best.optimal = true;
    return best;
  }
  // Greedy largest-first balancing fallback for large dimensions.
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return populations(a) > populations(b); });
  double w0 = 0.0, w1 = 0.0;
  for (int idx : order) {
    if (w0 <= w1) {
      best.block.push_back(idx);
      w0 += populations(idx);
    } else {
      w1 += populations(idx);
    }
  }
  std::sort(best.block.begin(), best.block.end());
  best.p_star = w0;
  best.q0 = w0;
  best.q1 = w1;
  best.optimal = false;
  return best;
}

double heisenberg_qfi_bound(double tau, const Perturbation& kappa) {
  if (tau < 0) throw Error("heisenberg_qfi_bound: tau must be >= 0");
  const double x = kappa.seminorm * tau;
  return x * x;
}

double k_separable_qfi_bound(double t, int k, int n, double h_norm) {
  if (k < 1 || n < 1 || k > n) throw Error("k_separable_qfi_bound: need 1 <= k <= n");
  const double blocks = static_cast<double>((n + k - 1) / k);
  return t * t * static_cast<double>(k) * k * blocks * h_norm * h_norm / 4.0;
}

}  // namespace planckian
