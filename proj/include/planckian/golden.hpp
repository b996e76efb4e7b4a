#pragma once

#include <cmath>
#include <utility>

namespace planckian {

/// Golden-section search for the maximum of a unimodal scalar function on
/// [lo, hi]. Returns (argmax, max). Ties drift toward lo.
template <typename Fn>
std::pair<double, double> golden_maximize(Fn&& f, double lo, double hi,
                                          double xtol = 1e-7) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

}  // namespace planckian
