#include "fanlab/fields.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "fanlab/error.hpp"

namespace fanlab {

RegionState physical_region(const GasLaw& law, double rho, double v2) {
  RegionState r;
  const double p = pressure(law, rho);
  const double internal = rho * internal_energy(law, rho);
  r.rho = rho;
  r.v2 = v2;
  r.momentum_flux = rho * v2 * v2 + p;
  r.kinetic = 0.5 * rho * v2 * v2;
  r.lagrangian = r.kinetic - internal;
  r.energy = r.kinetic + internal;
  r.energy_flux = (r.energy + p) * v2;
  return r;
}

const char* to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::TwoShock: return "2-shock";
    case FieldKind::ConvexIntegration: return "convex-integration";
    case FieldKind::Custom: return "custom";
  }
  return "custom";
}

SelfSimilarFanField::SelfSimilarFanField(FieldKind kind, std::vector<double> speeds,
                                         std::vector<RegionState> regions)
    : kind_(kind), speeds_(std::move(speeds)), regions_(std::move(regions)) {
  if (regions_.size() != speeds_.size() + 1)
    throw Error(ErrorKind::InvalidArgument, "a field needs one more region than interfaces");
  for (std::size_t k = 1; k < speeds_.size(); ++k)
    if (!(speeds_[k - 1] < speeds_[k]))
      throw Error(ErrorKind::InvalidArgument, "interface speeds must be strictly increasing");
}

std::size_t SelfSimilarFanField::region_index(double t, double x2) const {
  if (!(t > 0.0)) throw Error(ErrorKind::InvalidArgument, "fields are evaluated at t > 0");
  std::size_t k = 0;
  while (k < speeds_.size() && !(x2 < speeds_[k] * t)) ++k;
  return k;
}

SelfSimilarFanField constant_field(const GasLaw& law, double rho, double v2) {
  return SelfSimilarFanField(FieldKind::Custom, {}, {physical_region(law, rho, v2)});
}

SelfSimilarFanField two_shock_field(const RiemannData& data, const TwoShockSolution& shock) {
  return SelfSimilarFanField(FieldKind::TwoShock, {shock.nu_minus, shock.nu_plus},
                             {physical_region(data.law, data.rho_minus(), data.v_minus()),
                              physical_region(data.law, shock.rho_m, shock.v_m),
                              physical_region(data.law, data.rho_plus(), data.v_plus())});
}

SelfSimilarFanField wild_effective_field(const RiemannData& data, const FanSubsolution& sub) {
  RegionState mid;
  const double internal = sub.rho1 * internal_energy(data.law, sub.rho1);
  mid.rho = sub.rho1;
  mid.v2 = sub.beta;
  mid.momentum_flux = sub.effective_pressure + sub.rho1 * sub.beta * sub.beta;
  // rho1 C / 2 with C = beta^2 + eps1 + eps2, split so that the embedded
  // 2-shock (eps1 = eps2 = 0) reproduces the physical middle state bitwise.
  mid.kinetic = 0.5 * sub.rho1 * sub.beta * sub.beta + 0.5 * sub.rho1 * (sub.eps1 + sub.eps2);
  mid.lagrangian = mid.kinetic - internal;
  mid.energy = mid.kinetic + internal;
  mid.energy_flux = (mid.energy + pressure(data.law, sub.rho1)) * sub.beta;
  return SelfSimilarFanField(FieldKind::ConvexIntegration, {sub.nu_minus, sub.nu_plus},
                             {physical_region(data.law, data.rho_minus(), data.v_minus()),
                              mid,
                              physical_region(data.law, data.rho_plus(), data.v_plus())});
}

std::vector<double> interface_productions(const SelfSimilarFanField& field) {
  const auto& s = field.speeds();
  const auto& r = field.regions();
  std::vector<double> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k)
    out[k] = s[k] * (r[k + 1].energy - r[k].energy) - (r[k + 1].energy_flux - r[k].energy_flux);
  return out;
}

namespace {

// b(s) = (1 - s^2)^4 on [-1, 1].
double bump(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  return q * q * q * q;
}

double bump_derivative(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  return -8.0 * s * q * q * q;
}

// Antiderivative of b, clamped so that B(s) is constant outside [-1, 1].
double bump_integral(double s) {
  s = std::clamp(s, -1.0, 1.0);
  const double s2 = s * s;
  return s * (1.0 + s2 * (-4.0 / 3.0 + s2 * (6.0 / 5.0 + s2 * (-4.0 / 7.0 + s2 / 9.0))));
}

constexpr std::array<double, 4> kGaussNodes = {-0.8611363115940526, -0.3399810435848563,
                                               0.3399810435848563, 0.8611363115940526};
constexpr std::array<double, 4> kGaussWeights = {0.3478548451374538, 0.6521451548625461,
                                                 0.6521451548625461, 0.3478548451374538};

constexpr double kTestTimeCentre = 1.0;
constexpr double kTestTimeHalfWidth = 0.5;

struct Balance {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;
};

// x2-integral of U phi_t + F phi_x at time t for all three balances, exact
// because the field is piecewise constant in x2 and b has a closed-form
// antiderivative.
Balance spatial_integral(const SelfSimilarFanField& field, double t, double centre,
                         double width) {
  const double st = (t - kTestTimeCentre) / kTestTimeHalfWidth;
  const double chi = bump(st);
  const double chi_dot = bump_derivative(st) / kTestTimeHalfWidth;
  const auto& speeds = field.speeds();
  const auto& regions = field.regions();
  Balance b;
  for (std::size_t k = 0; k < regions.size(); ++k) {
    const double a = (k == 0) ? -INFINITY : speeds[k - 1] * t;
    const double c = (k == speeds.size()) ? INFINITY : speeds[k] * t;
    const double sa = std::isinf(a) ? -1.0 : (a - centre) / width;
    const double sc = std::isinf(c) ? 1.0 : (c - centre) / width;
    const double eta_integral = width * (bump_integral(sc) - bump_integral(sa));
    const double eta_jump = bump(sc) - bump(sa);  // int eta' over the region
    const RegionState& r = regions[k];
    b.mass += chi_dot * r.rho * eta_integral + chi * r.rho * r.v2 * eta_jump;
    b.momentum += chi_dot * r.rho * r.v2 * eta_integral + chi * r.momentum_flux * eta_jump;
    b.energy += chi_dot * r.energy * eta_integral + chi * r.energy_flux * eta_jump;
  }
  return b;
}

}  // namespace

WeakResidual weak_residual(const SelfSimilarFanField& field, double width, int resolution) {
  if (!(width > 0.0)) throw Error(ErrorKind::InvalidArgument, "mollification width must be positive");
  if (resolution < kMinQuadratureResolution)
    throw Error(ErrorKind::QuadratureFailure,
                "quadrature resolution below 16 panels cannot resolve the test functions");

  std::vector<double> centres;
  for (double s : field.speeds())
    for (double offset : {-0.5, 0.0, 0.5}) centres.push_back(s * kTestTimeCentre + offset * width);
  if (centres.empty()) centres.push_back(0.0);

  WeakResidual out;
  out.energy_min = INFINITY;
  out.energy_max = -INFINITY;
  // `resolution` panels per unit time, and at least that many per time an
  // interface needs to cross a test function of the given width.
  double fastest = 0.0;
  for (double s : field.speeds()) fastest = std::max(fastest, std::abs(s));
  const int panels = resolution * static_cast<int>(std::max(
      1.0, std::ceil(2.0 * kTestTimeHalfWidth * fastest / (2.0 * width))));
  const double t0 = kTestTimeCentre - kTestTimeHalfWidth;
  const double h = 2.0 * kTestTimeHalfWidth / panels;
  for (double centre : centres) {
    Balance total;
    for (int panel = 0; panel < panels; ++panel) {
      const double mid = t0 + (panel + 0.5) * h;
      for (std::size_t q = 0; q < kGaussNodes.size(); ++q) {
        const double t = mid + 0.5 * h * kGaussNodes[q];
        const double w = 0.5 * h * kGaussWeights[q];
        const Balance b = spatial_integral(field, t, centre, width);
        total.mass += w * b.mass;
        total.momentum += w * b.momentum;
        total.energy += w * b.energy;
      }
    }
    out.mass = std::max(out.mass, std::abs(total.mass));
    out.momentum = std::max(out.momentum, std::abs(total.momentum));
    out.energy_min = std::min(out.energy_min, total.energy);
    out.energy_max = std::max(out.energy_max, total.energy);
  }
  out.test_functions = centres.size();
  return out;
}

void write_field_csv(std::ostream& out, const SelfSimilarFanField& field, double t,
                     double x_lo, double x_hi, int samples, bool header) {
  if (samples < 2) throw Error(ErrorKind::InvalidArgument, "need at least two samples");
  if (!(x_lo < x_hi)) throw Error(ErrorKind::InvalidArgument, "empty sampling range");
  if (header) out << "schema_version,t,x2,rho,v2,E,L\n";
  char line[256];
  for (int i = 0; i < samples; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / (samples - 1);
    const RegionState& r = field.evaluate(t, x);
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  kFieldCsvSchemaVersion, t, x, r.rho, r.v2, r.energy, r.lagrangian);
    out << line;
  }
}

}  // namespace fanlab
