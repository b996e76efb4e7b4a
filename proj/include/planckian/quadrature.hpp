#pragma once

#include <array>
#include <functional>

#include "planckian/errors.hpp"

namespace planckian {

/// Gauss-Kronrod 15-point rule on [-1, 1]: abscissae (symmetric, the listed
/// values are the nonnegative half), Kronrod weights, and the embedded
/// 7-point Gauss weights used for error estimation.
struct GaussKronrod15 {
  static constexpr std::array<double, 8> abscissae = {
      0.991455371120813, 0.949107912342759, 0.864864423359769,
      0.741531185599394, 0.586087235467691, 0.405845151377397,
      0.207784955007898, 0.000000000000000};
  static constexpr std::array<double, 8> kronrod_weights = {
      0.022935322010529, 0.063092092629979, 0.104790010322250,
      0.140653259715525, 0.169004726639267, 0.190350578064785,
      0.204432940075298, 0.209482141084728};
  // Gauss weights for abscissae indices 1, 3, 5, 7.
  static constexpr std::array<double, 4> gauss_weights = {
      0.129484966168870, 0.279705391489277, 0.381830050505119,
      0.417959183673469};
};

/// One GK15 evaluation on [a, b]; err receives |K15 - G7|.
double gk15_panel(const std::function<double(double)>& f, double a, double b,
                  double* err);

/// Adaptive integration of f on [a, b] to absolute tolerance abs_tol.
/// The interval is pre-split into init_panels before refinement (useful
/// for oscillatory integrands whose period is known). Throws
/// QuadratureError when the error estimate cannot be driven below
/// tolerance within the subdivision budget.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int init_panels = 1);

/// Fixed 15-point rule applied on n equal panels (no error control).
double composite_gk15(const std::function<double(double)>& f, double a, double b,
                      int panels);

}  // namespace planckian
