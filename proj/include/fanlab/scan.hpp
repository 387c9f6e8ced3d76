#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "fanlab/admissibility.hpp"

namespace fanlab {

/// Parameter grid for domain scans. rho1 is sampled per data case as
/// floor + f (rho_m - floor), floor = max(rho-, rho+), for each fraction f in
/// (0, 1]; the sub-solution branch does not extend to or below floor.
struct ScanGrid {
  std::vector<double> rho1_fractions;
  std::vector<double> eps2_points;
  std::vector<double> gamma_points;
  std::vector<DataCase> data_cases;
  bool allow_isothermal = false;
};

std::vector<double> uniform_fractions(int count);
/// count points j * eps2_max / count, j = 1..count.
std::vector<double> uniform_eps2(int count, double eps2_max);

/// Six cases, symmetric and asymmetric, all satisfying the 2-shock existence
/// condition for every gamma in [1, 3].
std::vector<DataCase> default_data_cases();

/// 200 rho1 fractions, 50 eps2 points on (0, 2], gamma in
/// {1.2, 1.4, 5/3, 2, 2.5, 3} and the default data cases.
ScanGrid default_scan_grid();

/// gamma = 2 over rho- = 1, rho+ in {0.5, 1, 2}, symmetric velocity jumps in
/// {1, 2, 4, 8, 16} (cases without a 2-shock dropped), default rho1/eps2 grids.
ScanGrid default_counterexample_grid();

/// Throws InvalidArgument unless every axis is non-empty, strictly increasing
/// and in range and every data case has finite states with positive densities.
void validate_axes(const ScanGrid& grid);

/// validate_axes plus: every data case admits a 2-shock for every gamma, and
/// gamma = 1 only with allow_isothermal.
void validate_grid(const ScanGrid& grid);

struct ScanOptions {
  int threads = 1;
  double t_max = 1.0;
  double padding = kDefaultWindowPadding;
  double half_period = 0.5;
  double tol = kDefaultSolverTolerance;
};

enum class PointStatus { Ok, NoSubsolution, NoConvergence };

const char* to_string(PointStatus s);

struct ScanRecord {
  double gamma = 0.0;
  DataCase data;
  double rho_m = 0.0;
  double rho1 = 0.0;
  double eps2 = 0.0;
  PointStatus status = PointStatus::Ok;
  bool admissible = false;
  double nu_minus = 0.0;
  double nu_plus = 0.0;
  double beta = 0.0;
  double eps1 = 0.0;
  double kappa = 0.0;
  /// Dissipation of the wild solution minus that of the 2-shock, both as
  /// -dE/dt at 0+; positive means the wild solution dissipates faster.
  double rate_diff = 0.0;
  bool sarac_two_shock = false;     ///< 2-shock strictly sARAC-admissible
  bool laap0_two_shock = false;     ///< 2-shock strictly LAAP0-admissible
  bool arac_two_shock = false;      ///< 2-shock ARAC-admissible
  bool dafermos_two_shock = false;  ///< 2-shock selected by the entropy rate
};

/// Evaluates one (rho1, eps2) point. Verdict flags are only computed for
/// admissible points; solver failures are recorded in `status`.
ScanRecord evaluate_point(const RiemannData& data, const TwoShockSolution& shock, double rho1,
                          double eps2, const ScanOptions& options = {});

/// Records for every (rho1, eps2) of the grid for fixed data, rho1-major.
std::vector<ScanRecord> scan_domain(const RiemannData& data, const ScanGrid& grid,
                                    const ScanOptions& options = {});

/// All gammas and data cases of the grid, in grid order (gamma, data case,
/// rho1, eps2). Output does not depend on options.threads.
std::vector<ScanRecord> scan_grid(const ScanGrid& grid, const ScanOptions& options = {});

inline constexpr int kScanCsvSchemaVersion = 1;

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records);

struct KappaCheck {
  std::size_t points = 0;
  std::size_t admissible = 0;
  std::vector<ScanRecord> violations;  ///< admissible points with kappa >= 0
  /// With kappa negated the detector flags exactly the admissible points
  /// with kappa <= 0; false means the detector itself is broken.
  bool detector_ok = true;
};

/// With `negate` the sign of kappa is flipped first (detector self-test).
KappaCheck check_kappa_signs(const std::vector<ScanRecord>& records, bool negate = false);

/// Scans a gamma = 2 grid and collects admissible points where the 2-shock
/// fails to have the smaller second action derivative.
KappaCheck verify_global_selection(const ScanGrid& grid, const ScanOptions& options = {});

struct SweepRow {
  double gamma = 0.0;
  DataCase data;
  double rho_m = 0.0;
  std::size_t points = 0;
  std::size_t admissible = 0;
  std::size_t kappa_negative = 0;
  double fraction_negative = 0.0;  ///< NaN when nothing is admissible
  double kappa_min = 0.0;
  double kappa_max = 0.0;
  std::optional<double> rho_star;  ///< at the smallest positive eps2 of the grid
  double rho_star_eps2 = 0.0;
  /// Lower end of the largest sampled interval (x, rho_m) on which every
  /// admissible grid point has kappa < 0.
  std::optional<double> kappa_negative_from;
};

std::vector<SweepRow> gamma_sweep(const ScanGrid& grid, const ScanOptions& options = {});

struct CounterexampleWitness {
  double gamma = 0.0;
  DataCase data;
  double rho1 = 0.0;
  double eps2 = 0.0;
  double kappa = 0.0;
  double rate_diff = 0.0;
  bool refined = false;  ///< found by the local refinement pass
};

/// First admissible grid point where the wild solution dissipates energy
/// faster than the 2-shock (Dafermos rejects the 2-shock) while sARAC still
/// selects the 2-shock. Scans the grid first, then refines around the point
/// with the largest dissipation excess.
std::optional<CounterexampleWitness> find_entropy_rate_counterexample(
    const ScanGrid& grid, const ScanOptions& options = {});

/// Recomputes the witness point from scratch.
ScanRecord replay_witness(const CounterexampleWitness& witness, bool allow_isothermal = false,
                          const ScanOptions& options = {});

}  // namespace fanlab
