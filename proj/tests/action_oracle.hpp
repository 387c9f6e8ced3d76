#pragma once

// Space-time quadrature of actions built from the raw states, independent of
// the library's region bookkeeping and closed forms.

#include <cmath>
#include <initializer_list>
#include <vector>

#include "fanlab/action.hpp"
#include "oracles.hpp"

namespace oracle {

using fanlab::ComparisonWindow;
using fanlab::FanSubsolution;
using fanlab::RiemannData;
using fanlab::TwoShockSolution;

inline double lag(double gamma, double rho, double v) {
  return 0.5 * rho * v * v - std::pow(rho, gamma) / (gamma - 1.0);
}

// Lagrangian of the 2-shock at similarity coordinate xi, from the raw states.
inline double shock_lag(const RiemannData& d, const TwoShockSolution& s, double xi) {
  const double g = d.law.gamma();
  if (xi < s.nu_minus) return lag(g, d.rho_minus(), d.v_minus());
  if (xi < s.nu_plus) return lag(g, s.rho_m, s.v_m);
  return lag(g, d.rho_plus(), d.v_plus());
}

inline double wild_lag(const RiemannData& d, const FanSubsolution& w, double xi) {
  const double g = d.law.gamma();
  if (xi < w.nu_minus) return lag(g, d.rho_minus(), d.v_minus());
  if (xi < w.nu_plus)
    return 0.5 * w.rho1 * w.C - std::pow(w.rho1, g) / (g - 1.0);
  return lag(g, d.rho_plus(), d.v_plus());
}

// 2 L3 int_0^t int_ell1^ell2 f(x / tau) dx dtau for a function f of the
// similarity coordinate that is piecewise constant with breaks at `speeds`.
// Bisection locates the breaks in x, Gauss integrates in time (the inner
// integral is quadratic in tau).
template <class F>
double space_time_integral(F f, std::initializer_list<double> speeds, const ComparisonWindow& win,
                           double t) {
  const std::vector<double> breaks(speeds);
  auto inner = [&](double tau) {
    if (tau <= 0.0) return f(breaks.empty() ? 0.0 : breaks.front() - 1.0) * (win.ell2 - win.ell1);
    auto piece = [&](double x) {
      long k = 0;
      for (double b : breaks) k = 2 * k + (x / tau >= b);
      return k;
    };
    return piecewise_integral(piece, [&](double x) { return f(x / tau); }, win.ell1, win.ell2);
  };
  return 2.0 * win.half_period * gauss(inner, 0.0, t, 4);
}

inline double shock_action(const RiemannData& d, const TwoShockSolution& s,
                           const ComparisonWindow& win, double t) {
  return space_time_integral([&](double xi) { return shock_lag(d, s, xi); },
                             {s.nu_minus, s.nu_plus}, win, t);
}

inline double wild_action(const RiemannData& d, const FanSubsolution& w,
                          const ComparisonWindow& win, double t) {
  return space_time_integral([&](double xi) { return wild_lag(d, w, xi); },
                             {w.nu_minus, w.nu_plus}, win, t);
}

// Gap integrand integrated directly, so no cancellation between two actions.
inline double oracle_gap(const RiemannData& d, const TwoShockSolution& s, const FanSubsolution& w,
                         const ComparisonWindow& win, double t) {
  return space_time_integral(
      [&](double xi) { return shock_lag(d, s, xi) - wild_lag(d, w, xi); },
      {s.nu_minus, s.nu_plus, w.nu_minus, w.nu_plus}, win, t);
}

}  // namespace oracle
