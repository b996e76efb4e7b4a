#pragma once

#include <functional>
#include <vector>

#include "planckian/operators.hpp"

namespace planckian {

/// Piecewise description of a time-dependent Hamiltonian t -> H(t).
/// Segments are contiguous and non-overlapping; each one is either a
/// constant Hamiltonian or a continuous sampler.
class Schedule {
 public:
  struct Segment {
    double t_begin;
    double t_end;
    std::function<Matrix(double)> hamiltonian;
    double norm_hint;  // seminorm estimate used for the default step count
  };

  static Schedule piecewise_constant(
      std::vector<std::pair<double, HermitianOperator>> spans, double t_begin = 0.0);
  static Schedule from_function(double t_begin, double t_end,
                                std::function<Matrix(double)> hamiltonian,
                                double norm_hint);

  double t_begin() const { return segments_.front().t_begin; }
  double t_end() const { return segments_.back().t_end; }
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  explicit Schedule(std::vector<Segment> segments);
  std::vector<Segment> segments_;
};

/// Midpoint step-discretized time-ordered exponential applied as U rho U^dag.
/// steps = 0 picks the default so that max-segment |H| dt <= 0.05.
DensityMatrix propagate(const DensityMatrix& rho0, const Schedule& sched, double t,
                        int steps = 0);

enum class Subsystem { System, Machine };

/// Partial trace of a bipartite state with dims (d_system, d_machine).
DensityMatrix partial_trace(const DensityMatrix& rho_sm, int d_system, int d_machine,
                            Subsystem keep);

/// exp(-i H dt) via eigendecomposition.
Matrix unitary_step(const Matrix& h, double dt);

}  // namespace planckian
