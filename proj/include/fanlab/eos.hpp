#pragma once

namespace fanlab {

/// Planar velocity (x1, x2). The Riemann data only ever move along x2.
struct Velocity {
  double x1 = 0.0;
  double x2 = 0.0;

  double norm_squared() const { return x1 * x1 + x2 * x2; }
};

/// Polytropic law p = rho^gamma for 1 < gamma <= 3.
///
/// gamma == 1 (isothermal, eps = log rho) is accepted only when explicitly
/// requested; it sits outside the range the selection theory covers and is
/// kept for the endpoint of gamma sweeps.
class GasLaw {
 public:
  explicit GasLaw(double gamma, bool allow_isothermal = false);

  double gamma() const { return gamma_; }
  bool isothermal() const { return gamma_ == 1.0; }

 private:
  double gamma_;
};

double pressure(const GasLaw& law, double rho);

/// Specific internal energy with eps'(rho) = p / rho^2 and zero integration
/// constant: rho^(gamma-1) / (gamma-1), or log(rho) in the isothermal case.
double internal_energy(const GasLaw& law, double rho);

/// rho eps(rho) + rho |v|^2 / 2
double energy_density(const GasLaw& law, double rho, Velocity v);

/// rho |v|^2 / 2 - rho eps(rho)
double lagrangian_density(const GasLaw& law, double rho, Velocity v);

}  // namespace fanlab
