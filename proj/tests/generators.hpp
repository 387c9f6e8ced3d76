#pragma once

// Seeded random instances shared by the property tests.

#include <algorithm>
#include <random>

#include "fanlab/subsolution.hpp"

namespace gen {

// Compressive data with a 2-shock.
inline fanlab::RiemannData data(std::mt19937_64& rng, double gamma_lo = 1.05, double gamma_hi = 3.0) {
  std::uniform_real_distribution<double> gamma(gamma_lo, gamma_hi), rho(0.2, 5.0), v(-4.0, 4.0);
  for (;;) {
    fanlab::DataCase c{rho(rng), rho(rng), v(rng), v(rng)};
    fanlab::RiemannData d(fanlab::GasLaw(gamma(rng)), c);
    if (fanlab::two_shock_exists(d) && fanlab::two_shock_discriminant(d) > 1e-3) return d;
  }
}

struct Point {
  fanlab::RiemannData data;
  fanlab::TwoShockSolution shock;
  fanlab::FanSubsolution sub;
};

// Admissible sub-solution: rho1 drawn from (rho*, rho_m) at a random eps2.
inline Point admissible(std::mt19937_64& rng, double gamma_lo = 1.05, double gamma_hi = 3.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const fanlab::RiemannData d = data(rng, gamma_lo, gamma_hi);
    const fanlab::TwoShockSolution s = fanlab::solve_two_shock(d);
    const double eps2 = 0.02 + 0.5 * unit(rng);
    const double floor = std::max(d.rho_minus(), d.rho_plus());
    const double rho1 = s.rho_m - (s.rho_m - floor) * 0.2 * unit(rng);
    if (rho1 >= s.rho_m) continue;
    if (fanlab::is_admissible_at(d, rho1, eps2))
      return {d, s, fanlab::solve_fan_subsolution(d, rho1, eps2)};
  }
}

}  // namespace gen
