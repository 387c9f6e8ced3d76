#pragma once

#include <initializer_list>
#include <vector>

#include "fanlab/fields.hpp"

namespace fanlab {

/// Space-time box [-L3, L3] x [ell1, ell2] x [0, t_max] over which actions
/// and energies are compared. Every interface must stay strictly inside
/// (ell1, ell2) up to t_max so that fields are time-independent near the
/// boundary.
struct ComparisonWindow {
  double half_period = 0.5;  ///< L3
  double ell1 = -1.0;
  double ell2 = 1.0;
  double t_max = 1.0;

  double x1_length() const { return 2.0 * half_period; }
};

inline constexpr double kDefaultWindowPadding = 0.1;

/// Smallest window containing 0 and all interfaces of `fields` up to t_max,
/// widened on each side by `padding` times its length.
ComparisonWindow default_window(std::initializer_list<const SelfSimilarFanField*> fields,
                                double t_max = 1.0, double padding = kDefaultWindowPadding,
                                double half_period = 0.5);

/// Throws WindowTooSmall unless the field's interfaces stay inside the
/// window on [0, t] and t <= t_max.
void check_window(const SelfSimilarFanField& field, const ComparisonWindow& window, double t);

/// Action of a self-similar field as A(t) = linear t + quadratic t^2 / 2.
/// Background strips grow linearly in t, wedges quadratically.
struct ActionPolynomial {
  double linear = 0.0;
  double quadratic = 0.0;

  double operator()(double t) const { return linear * t + 0.5 * quadratic * t * t; }
};

ActionPolynomial action_polynomial(const SelfSimilarFanField& field,
                                   const ComparisonWindow& window);

/// int_0^t int_window L dx dtau, exact.
double action(const SelfSimilarFanField& field, const ComparisonWindow& window, double t);

/// 2-shock Lagrangian minus wild Lagrangian inside the middle wedge:
/// rho_m v_m^2 / 2 - rho_m eps(rho_m) - rho1 C / 2 + rho1 eps(rho1).
double lagrangian_diff_mid(const RiemannData& data, const TwoShockSolution& shock,
                           const FanSubsolution& sub);

/// One interval (speed_lo, speed_hi) of the merged interface-speed list.
struct SubWedge {
  double speed_lo = 0.0;
  double speed_hi = 0.0;
  double lagrangian_reference = 0.0;
  double lagrangian_other = 0.0;
  double contribution = 0.0;  ///< 2 L3 (speed_hi - speed_lo)(L_ref - L_other)
};

/// D(t) = A(reference) - A(other) = rate t + kappa t^2 / 2.
///
/// `rate` vanishes whenever both fields share their outer states (the
/// background strips cancel); `outer_correction` collects the remaining
/// strip terms and is likewise zero in that case.
struct ActionGap {
  double rate = 0.0;
  double kappa = 0.0;
  double outer_correction = 0.0;
  std::vector<SubWedge> wedges;

  double value(double t) const { return rate * t + 0.5 * kappa * t * t; }
};

struct GapEvaluation {
  double value = 0.0;
  ActionGap gap;
};

ActionGap action_gap_coefficients(const SelfSimilarFanField& reference,
                                  const SelfSimilarFanField& other,
                                  const ComparisonWindow& window);

GapEvaluation action_gap(const SelfSimilarFanField& reference, const SelfSimilarFanField& other,
                         const ComparisonWindow& window, double t);

/// Gap between the 2-shock and the wild solutions over `sub`.
GapEvaluation action_gap(const RiemannData& data, const TwoShockSolution& shock,
                         const FanSubsolution& sub, const ComparisonWindow& window, double t);

/// (D, dD/dt, d^2D/dt^2) at t = 0+ up to `order`; D is exactly quadratic,
/// so orders above 2 throw UnsupportedOrder.
std::vector<double> action_derivative_ladder(const ActionGap& gap, int order);

/// Rate of change of the total energy inside the window.
struct DissipationRate {
  double total = 0.0;            ///< dE/dt from the growth of every wedge
  double via_productions = 0.0;  ///< same quantity from interface productions and boundary fluxes
  double interior = 0.0;         ///< -2 L3 * sum of interface productions (net of boundary flux)
};

DissipationRate dissipation_rate(const SelfSimilarFanField& field, const ComparisonWindow& window);

}  // namespace fanlab
