#include "planckian/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace planckian {

double gk15_panel(const std::function<double(double)>& f, double a, double b,
                  double* err) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double k15 = 0.0, g7 = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = GaussKronrod15::abscissae[i];
    double fv;
    if (i == 7) {
      fv = f(mid);
    } else {
      fv = f(mid - half * x) + f(mid + half * x);
    }
    k15 += GaussKronrod15::kronrod_weights[i] * fv;
    if (i % 2 == 1) g7 += GaussKronrod15::gauss_weights[i / 2] * fv;
  }
  if (err) *err = std::abs(k15 - g7) * half;
  return k15 * half;
}

double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int init_panels) {
  struct Interval {
    double a, b, value, err;
    bool operator<(const Interval& o) const { return err < o.err; }
  };
  if (!(b > a)) return 0.0;
  init_panels = std::max(1, init_panels);
  std::priority_queue<Interval> heap;
  double total = 0.0, total_err = 0.0;
  const double w = (b - a) / init_panels;
  for (int i = 0; i < init_panels; ++i) {
    Interval iv;
    iv.a = a + i * w;
    iv.b = (i + 1 == init_panels) ? b : a + (i + 1) * w;
    iv.value = gk15_panel(f, iv.a, iv.b, &iv.err);
    total += iv.value;
    total_err += iv.err;
    heap.push(iv);
  }
  const int max_intervals = 400000;
  int n = init_panels;
  while (total_err > abs_tol && n < max_intervals) {
    Interval worst = heap.top();
    heap.pop();
    total -= worst.value;
    total_err -= worst.err;
    const double m = 0.5 * (worst.a + worst.b);
    if (m <= worst.a || m >= worst.b) {
      // Interval no longer splittable in double precision; keep its value.
      total += worst.value;
      continue;
    }
    for (int half = 0; half < 2; ++half) {
      Interval iv;
      iv.a = half == 0 ? worst.a : m;
      iv.b = half == 0 ? m : worst.b;
      iv.value = gk15_panel(f, iv.a, iv.b, &iv.err);
      total += iv.value;
      total_err += iv.err;
      heap.push(iv);
    }
    ++n;
  }
  if (total_err > abs_tol) {
    throw QuadratureError("adaptive_integrate: tolerance not reached");
  }
  return total;
}

double composite_gk15(const std::function<double(double)>& f, double a, double b,
                      int panels) {
  double total = 0.0;
  const double w = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    total += gk15_panel(f, a + i * w, a + (i + 1) * w, nullptr);
  }
  return total;
}

}  // namespace planckian
