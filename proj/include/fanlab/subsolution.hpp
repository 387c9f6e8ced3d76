#pragma once

#include <array>
#include <utility>

#include "fanlab/riemann.hpp"

namespace fanlab {

/// Piecewise-constant relaxed state on the three-wedge fan partition.
///
/// The middle wedge carries density rho1, velocity (alpha, beta), the
/// trace-free matrix u1 = [[u11, u12], [u12, -u11]] and the kinetic constant
/// C. With v1 = (0, beta) the gap matrix (C/2) Id - v1 (x) v1 + u1 is
/// diag(C/2 + u11, C/2 - beta^2 - u11) = diag(eps2, eps1), so that
/// C = beta^2 + eps1 + eps2.
struct FanSubsolution {
  double rho1 = 0.0;
  double eps2 = 0.0;
  double nu_minus = 0.0;
  double nu_plus = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double u11 = 0.0;
  double u12 = 0.0;
  double eps1 = 0.0;
  double C = 0.0;

  /// p(rho1) + rho1 eps1. The middle wedge's x2-momentum flux
  /// p(rho1) - rho1 u11 + C rho1 / 2 equals rho1 beta^2 + effective_pressure.
  double effective_pressure = 0.0;
};

/// Solves the four scalar interface conditions (mass and x2-momentum at
/// x2 = nu_- t and x2 = nu_+ t) for (nu_-, nu_+, beta, eps1); eps2 is free.
///
/// The solved branch is the one continuing the 2-shock from rho1 = rho_m:
/// both interfaces are compressive (mass crosses them left to right into the
/// middle wedge and out of it), which requires rho1 > max(rho-, rho+). On
/// that branch the system reduces to one strictly monotone equation in the
/// middle-wedge effective pressure, solved by bisection. rho1 equal to the
/// solver's rho_m returns the embedded 2-shock (eps1 = 0 exactly).
FanSubsolution solve_fan_subsolution(const RiemannData& data, double rho1, double eps2,
                                     double tol = kDefaultSolverTolerance);

/// Residuals [mass, x1-momentum, x2-momentum] at the left interface followed
/// by the same three at the right interface, evaluated from the relaxed
/// system with effective pressure p + C rho1 / 2 in the middle wedge.
std::array<double, 6> subsolution_residual(const RiemannData& data,
                                           const FanSubsolution& sub);

double residual_norm(const std::array<double, 6>& r);

/// Interface energy productions nu [E] - [G] (left, right) where the middle
/// wedge carries E1 = rho1 eps(rho1) + rho1 C / 2 and G1 = (E1 + p(rho1)) beta.
std::pair<double, double> subsolution_entropy_production(const RiemannData& data,
                                                         const FanSubsolution& sub);

/// eps1 > 0, eps2 > 0, nu_- < nu_+ and both productions nonnegative.
bool is_admissible(const RiemannData& data, const FanSubsolution& sub);

/// Same predicate evaluated directly from (rho1, eps2); solver failures
/// count as inadmissible.
bool is_admissible_at(const RiemannData& data, double rho1, double eps2,
                      double tol = kDefaultSolverTolerance);

struct RhoStarInterval {
  double rho_star = 0.0;
  double rho_m = 0.0;
};

/// Left end of the admissible interval (rho*, rho_m) at fixed eps2, located
/// by bisection on the admissibility predicate. Throws EmptyInterval when no
/// rho1 < rho_m is admissible.
RhoStarInterval find_rho_star(const RiemannData& data, double eps2, double tol = 1e-10);

/// The 2-shock written as a degenerate sub-solution (rho1 = rho_m, eps1 = 0).
FanSubsolution embed_two_shock(const RiemannData& data, const TwoShockSolution& shock,
                               double eps2 = 0.0);

}  // namespace fanlab
