#pragma once

#include <random>

#include "planckian/operators.hpp"

namespace planckian {

/// Seeded generator for random test/search inputs. Deterministic for a
/// fixed seed regardless of thread count (callers draw on one thread).
class StateSampler {
 public:
  explicit StateSampler(uint64_t seed) : rng_(seed) {}

  /// Ginibre-induced density matrix: G G^dag / Tr, G with iid standard
  /// complex Gaussian entries.
  DensityMatrix ginibre(int dim);

  /// GUE-like Hermitian matrix with Gaussian entries.
  HermitianOperator gue(int dim);

  /// Random Hermitian direction rescaled to spectral seminorm 1.
  HermitianOperator direction(int dim);

  double uniform(double lo, double hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace planckian
