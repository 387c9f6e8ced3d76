#pragma once

#include "fanlab/eos.hpp"

namespace fanlab {

/// Constant states on either side of the line x2 = 0. Velocities are
/// vertical: v_minus stands for (0, v_minus) and likewise for v_plus.
struct DataCase {
  double rho_minus = 1.0;
  double rho_plus = 1.0;
  double v_minus = 0.0;
  double v_plus = 0.0;

  friend bool operator==(const DataCase&, const DataCase&) = default;
};

struct RiemannData {
  GasLaw law;
  DataCase states;

  RiemannData(GasLaw law_, DataCase states_);

  double rho_minus() const { return states.rho_minus; }
  double rho_plus() const { return states.rho_plus; }
  double v_minus() const { return states.v_minus; }
  double v_plus() const { return states.v_plus; }
};

/// A constant state (density and planar velocity) on one side of an interface.
struct State {
  double rho = 1.0;
  Velocity v{};
};

struct TwoShockSolution {
  double rho_m = 0.0;
  double v_m = 0.0;
  double nu_minus = 0.0;
  double nu_plus = 0.0;
};

/// Jump-condition residuals across the planar interface x2 = speed * t.
struct RhResidual {
  double mass = 0.0;
  double momentum1 = 0.0;
  double momentum2 = 0.0;

  double norm() const;
};

/// Left-hand side of the 2-shock existence condition
/// (v- - v+)^2 rho+ rho- - (rho+ - rho-)(p(rho+) - p(rho-)).
double two_shock_discriminant(const RiemannData& data);

/// True iff the discriminant is positive and the data are compressive
/// (v_minus > v_plus). The discriminant alone is only necessary: with
/// v_minus < v_plus it also admits double-rarefaction data.
bool two_shock_exists(const RiemannData& data);

/// Velocity jump across a Hugoniot shock from `rho_side` to `rho`,
/// sqrt((rho - rho_side)(p(rho) - p(rho_side)) / (rho rho_side)).
double shock_velocity_jump(const GasLaw& law, double rho_side, double rho);

/// H(rho) = [v- - s_L(rho)] - [v+ + s_R(rho)], strictly decreasing on
/// (max(rho-, rho+), inf). Throws DomainError below that interval.
double hugoniot_gap(const RiemannData& data, double rho);

inline constexpr double kDefaultSolverTolerance = 1e-12;

TwoShockSolution solve_two_shock(const RiemannData& data,
                                 double tol = kDefaultSolverTolerance);

RhResidual rh_residual(const GasLaw& law, const State& left, const State& right,
                       double speed);

/// nu [E] - [(E + p) v2]; nonnegative iff the energy inequality holds
/// across the interface.
double entropy_production(const GasLaw& law, const State& left,
                          const State& right, double speed);

/// The three states of the 2-shock solution, left to right.
State left_state(const RiemannData& data);
State right_state(const RiemannData& data);
State middle_state(const TwoShockSolution& shock);

}  // namespace fanlab
