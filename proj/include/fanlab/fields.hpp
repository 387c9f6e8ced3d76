#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fanlab/riemann.hpp"
#include "fanlab/subsolution.hpp"

namespace fanlab {

/// Effective densities and x2-fluxes of one wedge of a self-similar field.
/// For convex-integration fields these are the almost-everywhere constant
/// values; the oscillation itself is never sampled.
struct RegionState {
  double rho = 0.0;
  double v2 = 0.0;
  double momentum_flux = 0.0;  ///< x2-flux of x2-momentum
  double kinetic = 0.0;        ///< rho |v|^2 / 2 (rho1 C / 2 in a wild wedge)
  double lagrangian = 0.0;     ///< kinetic - rho eps(rho)
  double energy = 0.0;         ///< kinetic + rho eps(rho)
  double energy_flux = 0.0;    ///< (energy + p) v2

  friend bool operator==(const RegionState&, const RegionState&) = default;
};

/// Exact Euler state (rho, (0, v2)) expressed as a region.
RegionState physical_region(const GasLaw& law, double rho, double v2);

enum class FieldKind { TwoShock, ConvexIntegration, Custom };

const char* to_string(FieldKind kind);

/// x1-independent field that is constant on wedges x2/t in (s_{k-1}, s_k).
class SelfSimilarFanField {
 public:
  SelfSimilarFanField(FieldKind kind, std::vector<double> speeds,
                      std::vector<RegionState> regions);

  FieldKind kind() const { return kind_; }
  const std::vector<double>& speeds() const { return speeds_; }
  const std::vector<RegionState>& regions() const { return regions_; }

  /// Index of the region containing (t, x2), t > 0. Points exactly on an
  /// interface belong to the region on its right.
  std::size_t region_index(double t, double x2) const;
  const RegionState& evaluate(double t, double x2) const {
    return regions_[region_index(t, x2)];
  }

 private:
  FieldKind kind_;
  std::vector<double> speeds_;
  std::vector<RegionState> regions_;
};

SelfSimilarFanField constant_field(const GasLaw& law, double rho, double v2);

SelfSimilarFanField two_shock_field(const RiemannData& data, const TwoShockSolution& shock);

/// Averaged field shared by every wild solution built on `sub`: outer Riemann
/// states, middle density rho1 with velocity beta, kinetic density rho1 C / 2
/// and x2-momentum flux equal to the sub-solution's effective pressure.
SelfSimilarFanField wild_effective_field(const RiemannData& data, const FanSubsolution& sub);

/// Energy productions nu_k [E] - [G] at every interface, left to right.
std::vector<double> interface_productions(const SelfSimilarFanField& field);

struct WeakResidual {
  double mass = 0.0;        ///< max |residual| over the test family
  double momentum = 0.0;    ///< max |residual| over the test family
  double energy_min = 0.0;  ///< min of the energy functional (>= 0 is dissipative)
  double energy_max = 0.0;
  std::size_t test_functions = 0;
};

inline constexpr double kDefaultMollificationWidth = 0.25;
inline constexpr int kDefaultQuadratureResolution = 64;
inline constexpr int kMinQuadratureResolution = 16;

/// Tests the field against x1-independent tensor-product polynomial bumps
/// phi(t, x2) = b((t - 1)/0.5) b((x2 - c)/width), b(s) = (1 - s^2)^4, centred
/// on and beside every interface. Returns sup-norms of
///   int int U phi_t + F phi_x2 dx2 dt
/// for mass and x2-momentum, and the range of the same functional for energy
/// (nonnegative for dissipative fields). The x2 integral is exact; time uses
/// 4-point Gauss-Legendre on `resolution` panels per unit time, multiplied
/// by the number of test-function diameters the fastest interface crosses.
WeakResidual weak_residual(const SelfSimilarFanField& field,
                           double width = kDefaultMollificationWidth,
                           int resolution = kDefaultQuadratureResolution);

inline constexpr int kFieldCsvSchemaVersion = 1;

/// Writes `samples` points of the field at time t over [x_lo, x_hi] as CSV
/// with columns schema_version,t,x2,rho,v2,E,L.
void write_field_csv(std::ostream& out, const SelfSimilarFanField& field, double t,
                     double x_lo, double x_hi, int samples, bool header = true);

}  // namespace fanlab
