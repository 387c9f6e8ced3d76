#pragma once

// Reference computations used only by the tests. None of them call into the
// library's solvers or closed forms.

#include <array>
#include <cmath>
#include <functional>

namespace oracle {

// Plain bisection on a sign change; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 400 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Integral over [a, b] of a piecewise-constant function whose pieces are
// labelled by a monotone `piece(x)`. Intervals whose ends lie in different
// pieces are split until shorter than `resolution`.
inline double piecewise_integral(const std::function<long(double)>& piece,
                                 const std::function<double(double)>& value, double a, double b,
                                 double resolution = 1e-14) {
  if (piece(a) == piece(b) || b - a < resolution) return value(0.5 * (a + b)) * (b - a);
  const double mid = 0.5 * (a + b);
  return piecewise_integral(piece, value, a, mid, resolution) +
         piecewise_integral(piece, value, mid, b, resolution);
}

// Composite 5-point Gauss-Legendre.
inline double gauss(const std::function<double(double)>& f, double a, double b, int panels) {
  static constexpr std::array<double, 5> x = {0.0, -0.5384693101056831, 0.5384693101056831,
                                              -0.9061798459386640, 0.9061798459386640};
  static constexpr std::array<double, 5> w = {0.5688888888888889, 0.4786286704993665,
                                              0.4786286704993665, 0.2369268850561891,
                                              0.2369268850561891};
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int q = 0; q < 5; ++q) sum += 0.5 * h * w[q] * f(mid + 0.5 * h * x[q]);
  }
  return sum;
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace oracle
