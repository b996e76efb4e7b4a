#include "planckian/dynamics.hpp"

#include <cmath>

namespace planckian {

Schedule::Schedule(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw ScheduleError("Schedule: no segments");
  for (size_t i = 0; i < segments_.size(); ++i) {
    if (!(segments_[i].t_end > segments_[i].t_begin)) {
      throw ScheduleError("Schedule: segment must have t_end > t_begin");
    }
    if (i > 0 && std::abs(segments_[i].t_begin - segments_[i - 1].t_end) > 1e-12) {
      throw ScheduleError("Schedule: segments must be contiguous");
    }
  }
}

Schedule Schedule::piecewise_constant(
    std::vector<std::pair<double, HermitianOperator>> spans, double t_begin) {
  std::vector<Segment> segs;
  double t = t_begin;
  for (auto& [duration, h] : spans) {
    Segment seg;
    seg.t_begin = t;
    seg.t_end = t + duration;
    Matrix m = h.entries();
    seg.hamiltonian = [m](double) { return m; };
    seg.norm_hint = spectral_seminorm(m);
    t = seg.t_end;
    segs.push_back(std::move(seg));
  }
  return Schedule(std::move(segs));
}

Schedule Schedule::from_function(double t_begin, double t_end,
                                 std::function<Matrix(double)> hamiltonian,
                                 double norm_hint) {
  Segment seg{t_begin, t_end, std::move(hamiltonian), norm_hint};
  std::vector<Segment> segs;
  segs.push_back(std::move(seg));
  return Schedule(std::move(segs));
}

Matrix unitary_step(const Matrix& h, double dt) {
  Spectrum s = hermitian_eig(h);
  Eigen::VectorXcd phases(s.eigenvalues.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -s.eigenvalues(i) * dt));
  }
  return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

DensityMatrix propagate(const DensityMatrix& rho0, const Schedule& sched, double t,
                        int steps) {
  if (t < sched.t_begin() - 1e-12 || t > sched.t_end() + 1e-12) {
    throw ScheduleError("propagate: t outside schedule support");
  }
  if (steps < 0) throw ScheduleError("propagate: steps must be >= 1 (or 0 for default)");
  Matrix rho = rho0.entries();
  for (const auto& seg : sched.segments()) {
    if (t <= seg.t_begin + 1e-15) break;
    const double a = seg.t_begin;
    const double b = std::min(t, seg.t_end);
    const double span = b - a;
    int n = steps;
    if (n == 0) {
      n = std::max(1, static_cast<int>(std::ceil(seg.norm_hint * span / 0.05)));
    }
    const double dt = span / n;
    for (int k = 0; k < n; ++k) {
      const double mid = a + (k + 0.5) * dt;
      Matrix u = unitary_step(seg.hamiltonian(mid), dt);
      rho = u * rho * u.adjoint();
    }
  }
  return DensityMatrix(std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho_sm, int d_system, int d_machine,
                            Subsystem keep) {
  const int d = rho_sm.dim();
  if (d_system < 1 || d_machine < 1 || d_system * d_machine != d) {
    throw DimError("partial_trace: dims do not factor the state dimension");
  }
  const Matrix& r = rho_sm.entries();
  if (keep == Subsystem::System) {
    Matrix out = Matrix::Zero(d_system, d_system);
    for (int i = 0; i < d_system; ++i)
      for (int j = 0; j < d_system; ++j)
        for (int k = 0; k < d_machine; ++k)
          out(i, j) += r(i * d_machine + k, j * d_machine + k);
    return DensityMatrix(std::move(out));
  }
  Matrix out = Matrix::Zero(d_machine, d_machine);
  for (int i = 0; i < d_machine; ++i)
    for (int j = 0; j < d_machine; ++j)
      for (int k = 0; k < d_system; ++k)
        out(i, j) += r(k * d_machine + i, k * d_machine + j);
  return DensityMatrix(std::move(out));
}

}  // namespace planckian
