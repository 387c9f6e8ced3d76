#include "fanlab/eos.hpp"

#include <cmath>
#include <sstream>

#include "fanlab/error.hpp"

namespace fanlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonPositiveDensity: return "NonPositiveDensity";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NoTwoShock: return "NoTwoShock";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NoSubsolution: return "NoSubsolution";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::TieUnresolved: return "TieUnresolved";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
  }
  return "Unknown";
}

namespace {

void require_positive(double rho) {
  if (!(rho > 0.0)) {
    std::ostringstream msg;
    msg << "density must be positive, got " << rho;
    throw Error(ErrorKind::NonPositiveDensity, msg.str());
  }
}

}  // namespace

GasLaw::GasLaw(double gamma, bool allow_isothermal) : gamma_(gamma) {
  if (gamma == 1.0 && allow_isothermal) return;
  if (!(gamma > 1.0 && gamma <= 3.0)) {
    std::ostringstream msg;
    msg << "adiabatic exponent must satisfy 1 < gamma <= 3";
    if (gamma == 1.0) msg << " (gamma = 1 requires the isothermal opt-in)";
    msg << ", got " << gamma;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

double pressure(const GasLaw& law, double rho) {
  require_positive(rho);
  return std::pow(rho, law.gamma());
}

double internal_energy(const GasLaw& law, double rho) {
  require_positive(rho);
  if (law.isothermal()) return std::log(rho);
  const double g = law.gamma();
  return std::pow(rho, g - 1.0) / (g - 1.0);
}

double energy_density(const GasLaw& law, double rho, Velocity v) {
  return rho * internal_energy(law, rho) + 0.5 * rho * v.norm_squared();
}

double lagrangian_density(const GasLaw& law, double rho, Velocity v) {
  return 0.5 * rho * v.norm_squared() - rho * internal_energy(law, rho);
}

}  // namespace fanlab
