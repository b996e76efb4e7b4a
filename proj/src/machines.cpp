#include "planckian/machines.hpp"

#include <cmath>
#include <utility>

#include "planckian/bures.hpp"
#include "planckian/gibbs.hpp"

namespace planckian {

TwoPointTask::TwoPointTask(HermitianOperator h1, HermitianOperator h2, double beta)
    : h1_(std::move(h1)),
      h2_(std::move(h2)),
      kappa_(HermitianOperator(h2_.entries() - h1_.entries())),
      beta_(beta) {
  if (h1_.dim() != h2_.dim()) throw DimError("TwoPointTask: dim mismatch");
  Spectrum s = hermitian_eig(kappa_);
  lambda_down_ = s.eigenvalues(0);
  lambda_up_ = s.eigenvalues(s.eigenvalues.size() - 1);
  const double scale =
      std::max({1.0, spectral_seminorm(h1_), spectral_seminorm(h2_)});
  if (kappa_norm() <= 1e-12 * scale) {
    throw DegenerateTask("TwoPointTask: H2 - H1 proportional to identity");
  }
}

double discrimination_overlap(const TwoPointTask& task, double tau) {
  if (tau < 0) throw Error("discrimination_overlap: tau must be >= 0");
  const double c = std::cos(0.5 * task.kappa_norm() * tau);
  return c * c;
}

double optimal_two_point_time(const TwoPointTask& task) {
  const DensityMatrix g1 = gibbs_state(task.h1(), task.beta());
  const DensityMatrix g2 = gibbs_state(task.h2(), task.beta());
  if ((g1.entries() - g2.entries()).cwiseAbs().maxCoeff() <= 1e-13) {
    throw DegenerateTask("optimal_two_point_time: identical Gibbs states");
  }
  return 2.0 * bures_angle(g1, g2) / task.kappa_norm();
}

double uhlmann_target_overlap(const TwoPointTask& task) {
  return fidelity(gibbs_state(task.h1(), task.beta()),
                  gibbs_state(task.h2(), task.beta()));
}

double swap_machine_time(int target_count) {
  if (target_count < 1) throw Error("swap_machine_time: target_count must be >= 1");
  if (target_count > 1) {
    throw NotAThermalizer("swap_machine_time: a fixed swapped-in state cannot match "
                          "more than one target");
  }
  return 0.0;
}

}  // namespace planckian
