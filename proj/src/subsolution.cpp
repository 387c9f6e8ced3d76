#include "fanlab/subsolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fanlab/error.hpp"

namespace fanlab {

namespace {

constexpr int kMaxBracketDoublings = 200;
constexpr int kMaxBisections = 400;

// Conserved densities and x2-fluxes of the relaxed system for one wedge.
struct RelaxedWedge {
  double rho;
  double mom1;
  double mom2;
  double mass_flux;
  double mom1_flux;
  double mom2_flux;
};

RelaxedWedge outer_wedge(const GasLaw& law, double rho, double v2) {
  // u = v (x) v - |v|^2/2 Id with v = (0, v2): u12 = 0, u22 = v2^2 / 2, and
  // the extra pressure is rho |v|^2 / 2.
  const double u22 = 0.5 * v2 * v2;
  return {rho, 0.0, rho * v2, rho * v2, 0.0,
          rho * u22 + pressure(law, rho) + 0.5 * rho * v2 * v2};
}

RelaxedWedge middle_wedge(const GasLaw& law, const FanSubsolution& s) {
  return {s.rho1,
          s.rho1 * s.alpha,
          s.rho1 * s.beta,
          s.rho1 * s.beta,
          s.rho1 * s.u12,
          -s.rho1 * s.u11 + pressure(law, s.rho1) + 0.5 * s.C * s.rho1};
}

void jump(const RelaxedWedge& l, const RelaxedWedge& r, double nu, double* out) {
  out[0] = nu * (r.rho - l.rho) - (r.mass_flux - l.mass_flux);
  out[1] = nu * (r.mom1 - l.mom1) - (r.mom1_flux - l.mom1_flux);
  out[2] = nu * (r.mom2 - l.mom2) - (r.mom2_flux - l.mom2_flux);
}

}  // namespace

FanSubsolution solve_fan_subsolution(const RiemannData& data, double rho1, double eps2,
                                     double tol) {
  if (!(rho1 > 0.0)) throw Error(ErrorKind::NonPositiveDensity, "rho1 must be positive");
  if (!(eps2 >= 0.0) || !std::isfinite(eps2))
    throw Error(ErrorKind::InvalidArgument, "eps2 must be finite and nonnegative");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (!two_shock_exists(data))
    throw Error(ErrorKind::NoTwoShock, "Riemann data violate the 2-shock existence condition");

  // At rho_m the branch is the 2-shock itself; return it exactly rather than
  // a solve whose eps1 carries rounding of either sign.
  const TwoShockSolution shock = solve_two_shock(data, tol);
  if (rho1 == shock.rho_m) return embed_two_shock(data, shock, eps2);

  const GasLaw& law = data.law;
  const double rm = data.rho_minus();
  const double rp = data.rho_plus();
  if (!(rho1 > std::max(rm, rp))) {
    std::ostringstream msg;
    msg << "no compressive fan sub-solution for rho1 = " << rho1
        << " <= max(rho-, rho+) = " << std::max(rm, rp);
    throw Error(ErrorKind::NoSubsolution, msg.str());
  }

  const double p_m = pressure(law, rm);
  const double p_p = pressure(law, rp);
  // Specific-volume jumps 1/rho_side - 1/rho1 across each interface.
  const double a_left = (rho1 - rm) / (rm * rho1);
  const double a_right = (rho1 - rp) / (rp * rho1);
  const double dv = data.v_minus() - data.v_plus();

  // Velocity mismatch as a function of the middle effective pressure P:
  // beta from the left (v- - sqrt((P - p-) a_L)) minus beta from the right
  // (v+ + sqrt((P - p+) a_R)). Strictly decreasing in P.
  auto mismatch = [&](double P) {
    return dv - std::sqrt(std::max(0.0, (P - p_m) * a_left)) -
           std::sqrt(std::max(0.0, (P - p_p) * a_right));
  };

  double lo = std::max(p_m, p_p);
  if (mismatch(lo) < 0.0) {
    std::ostringstream msg;
    msg << "jump system has no compressive solution at rho1 = " << rho1;
    throw Error(ErrorKind::NoSubsolution, msg.str());
  }
  double hi = lo + std::max(1.0, lo);
  int doublings = 0;
  while (mismatch(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > kMaxBracketDoublings)
      throw Error(ErrorKind::NoConvergence, "failed to bracket the effective pressure");
  }
  double P = 0.5 * (lo + hi);
  double f = mismatch(P);
  for (int it = 0; it < kMaxBisections && f != 0.0; ++it) {
    if (f > 0.0) lo = P; else hi = P;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    P = mid;
    f = mismatch(P);
  }
  const double scale = std::max(1.0, std::abs(data.v_minus()) + std::abs(data.v_plus()));
  if (!(std::abs(f) <= tol * scale)) {
    std::ostringstream msg;
    msg << "effective-pressure bisection stalled with mismatch " << f;
    throw Error(ErrorKind::NoConvergence, msg.str());
  }

  FanSubsolution s;
  s.rho1 = rho1;
  s.eps2 = eps2;
  const double beta_left = data.v_minus() - std::sqrt(std::max(0.0, (P - p_m) * a_left));
  const double beta_right = data.v_plus() + std::sqrt(std::max(0.0, (P - p_p) * a_right));
  s.beta = 0.5 * (beta_left + beta_right);
  s.alpha = 0.0;
  s.u12 = 0.0;
  s.effective_pressure = P;
  s.eps1 = (P - pressure(law, rho1)) / rho1;
  s.C = s.beta * s.beta + s.eps1 + s.eps2;
  // eps2 = C/2 + u11 (x1 gap), eps1 = C/2 - beta^2 - u11 (x2 gap).
  s.u11 = s.eps2 - 0.5 * s.C;
  s.nu_minus = (rho1 * s.beta - rm * data.v_minus()) / (rho1 - rm);
  s.nu_plus = (rp * data.v_plus() - rho1 * s.beta) / (rp - rho1);
  if (!(s.nu_minus < s.nu_plus))
    throw Error(ErrorKind::NoSubsolution, "interface speeds are not ordered");
  return s;
}

std::array<double, 6> subsolution_residual(const RiemannData& data,
                                           const FanSubsolution& sub) {
  const RelaxedWedge left = outer_wedge(data.law, data.rho_minus(), data.v_minus());
  const RelaxedWedge mid = middle_wedge(data.law, sub);
  const RelaxedWedge right = outer_wedge(data.law, data.rho_plus(), data.v_plus());
  std::array<double, 6> r{};
  jump(left, mid, sub.nu_minus, r.data());
  jump(mid, right, sub.nu_plus, r.data() + 3);
  return r;
}

double residual_norm(const std::array<double, 6>& r) {
  double sum = 0.0;
  for (double x : r) sum += x * x;
  return std::sqrt(sum);
}

std::pair<double, double> subsolution_entropy_production(const RiemannData& data,
                                                         const FanSubsolution& sub) {
  const GasLaw& law = data.law;
  const double e_l = energy_density(law, data.rho_minus(), {0.0, data.v_minus()});
  const double g_l = (e_l + pressure(law, data.rho_minus())) * data.v_minus();
  const double e_r = energy_density(law, data.rho_plus(), {0.0, data.v_plus()});
  const double g_r = (e_r + pressure(law, data.rho_plus())) * data.v_plus();
  const double e_1 = sub.rho1 * internal_energy(law, sub.rho1) + 0.5 * sub.rho1 * sub.C;
  const double g_1 = (e_1 + pressure(law, sub.rho1)) * sub.beta;
  return {sub.nu_minus * (e_1 - e_l) - (g_1 - g_l),
          sub.nu_plus * (e_r - e_1) - (g_r - g_1)};
}

bool is_admissible(const RiemannData& data, const FanSubsolution& sub) {
  if (!(sub.eps1 > 0.0) || !(sub.eps2 > 0.0) || !(sub.nu_minus < sub.nu_plus)) return false;
  const auto [left, right] = subsolution_entropy_production(data, sub);
  return left >= 0.0 && right >= 0.0;
}

bool is_admissible_at(const RiemannData& data, double rho1, double eps2, double tol) {
  try {
    return is_admissible(data, solve_fan_subsolution(data, rho1, eps2, tol));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoSubsolution || e.kind() == ErrorKind::NoConvergence)
      return false;
    throw;
  }
}

RhoStarInterval find_rho_star(const RiemannData& data, double eps2, double tol) {
  if (!(eps2 > 0.0)) throw Error(ErrorKind::InvalidArgument, "find_rho_star needs eps2 > 0");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const TwoShockSolution shock = solve_two_shock(data);
  const double rho_m = shock.rho_m;
  const double floor = std::max(data.rho_minus(), data.rho_plus());
  const double width = rho_m - floor;

  // Anchor: the admissible point closest to rho_m on a dyadic ladder.
  double anchor = 0.0;
  bool found = false;
  for (int k = 40; k >= 1 && !found; --k) {
    const double candidate = rho_m - std::ldexp(width, -k);
    if (is_admissible_at(data, candidate, eps2)) {
      anchor = candidate;
      found = true;
    }
  }
  if (!found) {
    std::ostringstream msg;
    msg << "no admissible rho1 < rho_m for eps2 = " << eps2;
    throw Error(ErrorKind::EmptyInterval, msg.str());
  }

  double bad = floor;
  double good = anchor;
  while (good - bad > tol) {
    const double mid = 0.5 * (bad + good);
    if (mid <= bad || mid >= good) break;
    if (is_admissible_at(data, mid, eps2)) good = mid; else bad = mid;
  }
  return {0.5 * (bad + good), rho_m};
}

FanSubsolution embed_two_shock(const RiemannData& data, const TwoShockSolution& shock,
                               double eps2) {
  FanSubsolution s;
  s.rho1 = shock.rho_m;
  s.eps2 = eps2;
  s.nu_minus = shock.nu_minus;
  s.nu_plus = shock.nu_plus;
  s.beta = shock.v_m;
  s.eps1 = 0.0;
  s.C = s.beta * s.beta + s.eps2;
  s.u11 = s.eps2 - 0.5 * s.C;
  s.effective_pressure = pressure(data.law, shock.rho_m);
  return s;
}

}  // namespace fanlab
