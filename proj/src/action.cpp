#include "fanlab/action.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fanlab/error.hpp"

namespace fanlab {

namespace {

void validate(const ComparisonWindow& w) {
  if (!(w.half_period > 0.0) || !(w.ell1 < w.ell2) || !(w.t_max > 0.0))
    throw Error(ErrorKind::InvalidArgument,
                "window needs L3 > 0, ell1 < ell2 and t_max > 0");
}

}  // namespace

ComparisonWindow default_window(std::initializer_list<const SelfSimilarFanField*> fields,
                                double t_max, double padding, double half_period) {
  if (!(t_max > 0.0) || !(padding > 0.0) || !(half_period > 0.0))
    throw Error(ErrorKind::InvalidArgument, "window defaults need positive t_max, padding and L3");
  double lo = 0.0;
  double hi = 0.0;
  for (const SelfSimilarFanField* f : fields) {
    for (double s : f->speeds()) {
      lo = std::min(lo, s * t_max);
      hi = std::max(hi, s * t_max);
    }
  }
  const double pad = (hi > lo) ? padding * (hi - lo) : padding;
  return {half_period, lo - pad, hi + pad, t_max};
}

void check_window(const SelfSimilarFanField& field, const ComparisonWindow& window, double t) {
  validate(window);
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "time must be nonnegative");
  std::ostringstream msg;
  if (t > window.t_max) {
    msg << "t = " << t << " exceeds the window's t_max = " << window.t_max;
    throw Error(ErrorKind::WindowTooSmall, msg.str());
  }
  if (field.speeds().empty()) {
    if (!(window.ell1 < 0.0 && window.ell2 > 0.0))
      throw Error(ErrorKind::WindowTooSmall, "window must contain x2 = 0");
    return;
  }
  const double first = std::min(0.0, field.speeds().front() * t);
  const double last = std::max(0.0, field.speeds().back() * t);
  if (!(window.ell1 < first) || !(window.ell2 > last)) {
    msg << "interfaces leave [" << window.ell1 << ", " << window.ell2 << "] before t = " << t;
    throw Error(ErrorKind::WindowTooSmall, msg.str());
  }
}

ActionPolynomial action_polynomial(const SelfSimilarFanField& field,
                                   const ComparisonWindow& window) {
  check_window(field, window, window.t_max);
  const auto& s = field.speeds();
  const auto& r = field.regions();
  const double scale = window.x1_length();
  ActionPolynomial a;
  if (s.empty()) {
    a.linear = scale * r.front().lagrangian * (window.ell2 - window.ell1);
    return a;
  }
  // Region 0 spans (ell1, s_0 t), the last (s_n t, ell2), inner ones
  // (s_{k-1} t, s_k t).
  a.linear = scale * (r.back().lagrangian * window.ell2 - r.front().lagrangian * window.ell1);
  double q = r.front().lagrangian * s.front() - r.back().lagrangian * s.back();
  for (std::size_t k = 1; k < s.size(); ++k) q += r[k].lagrangian * (s[k] - s[k - 1]);
  a.quadratic = scale * q;
  return a;
}

double action(const SelfSimilarFanField& field, const ComparisonWindow& window, double t) {
  check_window(field, window, t);
  return action_polynomial(field, window)(t);
}

double lagrangian_diff_mid(const RiemannData& data, const TwoShockSolution& shock,
                           const FanSubsolution& sub) {
  const GasLaw& law = data.law;
  return 0.5 * shock.rho_m * shock.v_m * shock.v_m -
         shock.rho_m * internal_energy(law, shock.rho_m) - 0.5 * sub.rho1 * sub.C +
         sub.rho1 * internal_energy(law, sub.rho1);
}

ActionGap action_gap_coefficients(const SelfSimilarFanField& reference,
                                  const SelfSimilarFanField& other,
                                  const ComparisonWindow& window) {
  check_window(reference, window, window.t_max);
  check_window(other, window, window.t_max);
  const double scale = window.x1_length();
  const RegionState& ref_lo = reference.regions().front();
  const RegionState& ref_hi = reference.regions().back();
  const RegionState& oth_lo = other.regions().front();
  const RegionState& oth_hi = other.regions().back();

  ActionGap gap;
  gap.rate = scale * ((ref_hi.lagrangian - oth_hi.lagrangian) * window.ell2 -
                      (ref_lo.lagrangian - oth_lo.lagrangian) * window.ell1);

  std::vector<double> breaks = reference.speeds();
  breaks.insert(breaks.end(), other.speeds().begin(), other.speeds().end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  if (breaks.empty()) return gap;

  for (std::size_t k = 1; k < breaks.size(); ++k) {
    SubWedge w;
    w.speed_lo = breaks[k - 1];
    w.speed_hi = breaks[k];
    const double mid = 0.5 * (w.speed_lo + w.speed_hi);
    w.lagrangian_reference = reference.evaluate(1.0, mid).lagrangian;
    w.lagrangian_other = other.evaluate(1.0, mid).lagrangian;
    w.contribution =
        scale * (w.speed_hi - w.speed_lo) * (w.lagrangian_reference - w.lagrangian_other);
    gap.kappa += w.contribution;
    gap.wedges.push_back(w);
  }
  gap.outer_correction =
      scale * ((ref_lo.lagrangian - oth_lo.lagrangian) * breaks.front() -
               (ref_hi.lagrangian - oth_hi.lagrangian) * breaks.back());
  gap.kappa += gap.outer_correction;
  return gap;
}

GapEvaluation action_gap(const SelfSimilarFanField& reference, const SelfSimilarFanField& other,
                         const ComparisonWindow& window, double t) {
  check_window(reference, window, t);
  check_window(other, window, t);
  GapEvaluation out;
  out.gap = action_gap_coefficients(reference, other, window);
  out.value = out.gap.value(t);
  return out;
}

GapEvaluation action_gap(const RiemannData& data, const TwoShockSolution& shock,
                         const FanSubsolution& sub, const ComparisonWindow& window, double t) {
  return action_gap(two_shock_field(data, shock), wild_effective_field(data, sub), window, t);
}

std::vector<double> action_derivative_ladder(const ActionGap& gap, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "derivative order must be nonnegative");
  if (order > 2)
    throw Error(ErrorKind::UnsupportedOrder,
                "the action gap is exactly quadratic in t; orders above 2 are not tracked");
  const double all[3] = {0.0, gap.rate, gap.kappa};
  return std::vector<double>(all, all + order + 1);
}

DissipationRate dissipation_rate(const SelfSimilarFanField& field, const ComparisonWindow& window) {
  check_window(field, window, window.t_max);
  const auto& s = field.speeds();
  const auto& r = field.regions();
  const double scale = window.x1_length();
  DissipationRate rate;
  if (s.empty()) return rate;

  double growth = r.front().energy * s.front() - r.back().energy * s.back();
  for (std::size_t k = 1; k < s.size(); ++k) growth += r[k].energy * (s[k] - s[k - 1]);
  rate.total = scale * growth;

  double production = 0.0;
  for (double p : interface_productions(field)) production += p;
  rate.interior = -scale * production;
  rate.via_productions =
      rate.interior + scale * (r.front().energy_flux - r.back().energy_flux);
  return rate;
}

}  // namespace fanlab
