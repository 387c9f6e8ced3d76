#include "fanlab/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fanlab/error.hpp"

namespace fanlab {

namespace {

constexpr int kMaxBracketDoublings = 60;
constexpr int kMaxBisections = 400;

double momentum_flux(const GasLaw& law, const State& s) {
  return s.rho * s.v.x2 * s.v.x2 + pressure(law, s.rho);
}

double energy_flux(const GasLaw& law, const State& s) {
  return (energy_density(law, s.rho, s.v) + pressure(law, s.rho)) * s.v.x2;
}

}  // namespace

RiemannData::RiemannData(GasLaw law_, DataCase states_)
    : law(law_), states(states_) {
  if (!(states.rho_minus > 0.0) || !(states.rho_plus > 0.0))
    throw Error(ErrorKind::NonPositiveDensity,
                "Riemann data densities must be positive");
  if (!std::isfinite(states.v_minus) || !std::isfinite(states.v_plus))
    throw Error(ErrorKind::InvalidArgument, "Riemann data velocities must be finite");
}

double RhResidual::norm() const {
  return std::sqrt(mass * mass + momentum1 * momentum1 + momentum2 * momentum2);
}

double two_shock_discriminant(const RiemannData& data) {
  const double dv = data.v_minus() - data.v_plus();
  const double rm = data.rho_minus();
  const double rp = data.rho_plus();
  return dv * dv * rp * rm -
         (rp - rm) * (pressure(data.law, rp) - pressure(data.law, rm));
}

bool two_shock_exists(const RiemannData& data) {
  return data.v_minus() > data.v_plus() && two_shock_discriminant(data) > 0.0;
}

double shock_velocity_jump(const GasLaw& law, double rho_side, double rho) {
  const double num = (rho - rho_side) * (pressure(law, rho) - pressure(law, rho_side));
  return std::sqrt(std::max(0.0, num / (rho * rho_side)));
}

double hugoniot_gap(const RiemannData& data, double rho) {
  const double floor = std::max(data.rho_minus(), data.rho_plus());
  if (!(rho > floor)) {
    std::ostringstream msg;
    msg << "hugoniot_gap needs rho > max(rho-, rho+) = " << floor << ", got " << rho;
    throw Error(ErrorKind::DomainError, msg.str());
  }
  const double left = data.v_minus() - shock_velocity_jump(data.law, data.rho_minus(), rho);
  const double right = data.v_plus() + shock_velocity_jump(data.law, data.rho_plus(), rho);
  return left - right;
}

TwoShockSolution solve_two_shock(const RiemannData& data, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (!two_shock_exists(data)) {
    std::ostringstream msg;
    msg << "Riemann data violate the 2-shock existence condition "
           "(v- > v+ and (v- - v+)^2 rho+ rho- - (rho+ - rho-)(p+ - p-) > 0); "
           "discriminant = "
        << two_shock_discriminant(data);
    throw Error(ErrorKind::NoTwoShock, msg.str());
  }

  const double floor = std::max(data.rho_minus(), data.rho_plus());
  double lo = floor * (1.0 + 1e-12);
  double hi = 2.0 * floor;
  if (hugoniot_gap(data, lo) <= 0.0)
    throw Error(ErrorKind::NoConvergence, "Hugoniot gap not positive at the bracket floor");
  int doublings = 0;
  while (hugoniot_gap(data, hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > kMaxBracketDoublings)
      throw Error(ErrorKind::NoConvergence, "failed to bracket the intermediate density");
  }

  // |H| is compared against tol relative to the velocity scale of the data.
  const double scale = std::max(1.0, std::abs(data.v_minus()) + std::abs(data.v_plus()));
  double rho = 0.5 * (lo + hi);
  double gap = hugoniot_gap(data, rho);
  for (int it = 0; it < kMaxBisections && std::abs(gap) > 0.0; ++it) {
    if (gap > 0.0) lo = rho; else hi = rho;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    rho = mid;
    gap = hugoniot_gap(data, rho);
  }
  if (!(std::abs(gap) <= tol * scale)) {
    std::ostringstream msg;
    msg << "bisection stalled with |H| = " << std::abs(gap) << " > " << tol * scale;
    throw Error(ErrorKind::NoConvergence, msg.str());
  }

  TwoShockSolution out;
  out.rho_m = rho;
  // Average of the two branches; they differ by |H| <= tol.
  const double from_left = data.v_minus() - shock_velocity_jump(data.law, data.rho_minus(), rho);
  const double from_right = data.v_plus() + shock_velocity_jump(data.law, data.rho_plus(), rho);
  out.v_m = 0.5 * (from_left + from_right);
  out.nu_minus = (rho * out.v_m - data.rho_minus() * data.v_minus()) / (rho - data.rho_minus());
  out.nu_plus = (data.rho_plus() * data.v_plus() - rho * out.v_m) / (data.rho_plus() - rho);
  return out;
}

RhResidual rh_residual(const GasLaw& law, const State& left, const State& right,
                       double speed) {
  RhResidual r;
  const double mom1_l = left.rho * left.v.x1;
  const double mom1_r = right.rho * right.v.x1;
  const double mom2_l = left.rho * left.v.x2;
  const double mom2_r = right.rho * right.v.x2;
  r.mass = speed * (right.rho - left.rho) - (mom2_r - mom2_l);
  r.momentum1 = speed * (mom1_r - mom1_l) - (mom1_r * right.v.x2 - mom1_l * left.v.x2);
  r.momentum2 = speed * (mom2_r - mom2_l) - (momentum_flux(law, right) - momentum_flux(law, left));
  return r;
}

double entropy_production(const GasLaw& law, const State& left, const State& right,
                          double speed) {
  const double e_l = energy_density(law, left.rho, left.v);
  const double e_r = energy_density(law, right.rho, right.v);
  return speed * (e_r - e_l) - (energy_flux(law, right) - energy_flux(law, left));
}

State left_state(const RiemannData& data) {
  return {data.rho_minus(), {0.0, data.v_minus()}};
}

State right_state(const RiemannData& data) {
  return {data.rho_plus(), {0.0, data.v_plus()}};
}

State middle_state(const TwoShockSolution& shock) {
  return {shock.rho_m, {0.0, shock.v_m}};
}

}  // namespace fanlab
