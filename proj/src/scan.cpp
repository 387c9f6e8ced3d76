#include "fanlab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include "fanlab/error.hpp"

namespace fanlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) return false;
  return true;
}

// Runs body(i) for i in [0, n) on up to `threads` workers.
template <class Body>
void parallel_for(std::size_t n, int threads, Body body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1, threads), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double rho1_at(const RiemannData& data, double rho_m, double fraction) {
  const double floor = std::max(data.rho_minus(), data.rho_plus());
  return fraction == 1.0 ? rho_m : floor + fraction * (rho_m - floor);
}

}  // namespace

const char* to_string(PointStatus s) {
  switch (s) {
    case PointStatus::Ok: return "ok";
    case PointStatus::NoSubsolution: return "no_subsolution";
    case PointStatus::NoConvergence: return "no_convergence";
  }
  return "?";
}

std::vector<double> uniform_fractions(int count) {
  std::vector<double> out;
  for (int i = 1; i <= count; ++i) out.push_back(static_cast<double>(i) / count);
  return out;
}

std::vector<double> uniform_eps2(int count, double eps2_max) {
  std::vector<double> out;
  for (int j = 1; j <= count; ++j) out.push_back(eps2_max * j / count);
  return out;
}

std::vector<DataCase> default_data_cases() {
  return {
      {1.0, 1.0, 1.0, -1.0},
      {1.0, 1.0, 8.0, -8.0},
      {1.0, 2.0, 2.0, -2.0},
      {0.5, 2.0, 5.0, -1.0},
      {2.0, 1.0, 3.0, -3.0},
      {1.0, 1.5, 5.0, 0.0},
  };
}

ScanGrid default_scan_grid() {
  ScanGrid g;
  g.rho1_fractions = uniform_fractions(200);
  g.eps2_points = uniform_eps2(50, 2.0);
  g.gamma_points = {1.2, 1.4, 5.0 / 3.0, 2.0, 2.5, 3.0};
  g.data_cases = default_data_cases();
  return g;
}

ScanGrid default_counterexample_grid() {
  ScanGrid g;
  g.rho1_fractions = uniform_fractions(200);
  g.eps2_points = uniform_eps2(50, 2.0);
  g.gamma_points = {2.0};
  const GasLaw law(2.0);
  for (double rho_plus : {0.5, 1.0, 2.0})
    for (double jump : {1.0, 2.0, 4.0, 8.0, 16.0}) {
      DataCase c{1.0, rho_plus, 0.5 * jump, -0.5 * jump};
      if (two_shock_exists(RiemannData(law, c))) g.data_cases.push_back(c);
    }
  return g;
}

void validate_axes(const ScanGrid& grid) {
  auto fail = [](const char* what) { throw Error(ErrorKind::InvalidArgument, what); };
  if (grid.rho1_fractions.empty() || grid.eps2_points.empty() || grid.gamma_points.empty() ||
      grid.data_cases.empty())
    fail("scan grid has an empty axis");
  if (!strictly_increasing(grid.rho1_fractions) || !strictly_increasing(grid.eps2_points) ||
      !strictly_increasing(grid.gamma_points))
    fail("scan grid axes must be strictly increasing");
  if (!(grid.rho1_fractions.front() > 0.0) || !(grid.rho1_fractions.back() <= 1.0))
    fail("rho1 fractions must lie in (0, 1]");
  if (!(grid.eps2_points.front() >= 0.0) || !std::isfinite(grid.eps2_points.back()))
    fail("eps2 points must be finite and nonnegative");
  if (!(grid.gamma_points.front() >= 1.0) || !std::isfinite(grid.gamma_points.back()))
    fail("gamma points must be finite and at least 1");
  for (const DataCase& c : grid.data_cases)
    if (!(c.rho_minus > 0.0) || !(c.rho_plus > 0.0) || !std::isfinite(c.rho_minus) ||
        !std::isfinite(c.rho_plus) || !std::isfinite(c.v_minus) || !std::isfinite(c.v_plus))
      fail("data cases need finite states with positive densities");
}

void validate_grid(const ScanGrid& grid) {
  validate_axes(grid);
  for (double g : grid.gamma_points) {
    const GasLaw law(g, grid.allow_isothermal);
    for (const DataCase& c : grid.data_cases)
      if (!two_shock_exists(RiemannData(law, c)))
        throw Error(ErrorKind::InvalidArgument,
                    "every data case must satisfy the 2-shock existence condition for every gamma");
  }
}

ScanRecord evaluate_point(const RiemannData& data, const TwoShockSolution& shock, double rho1,
                          double eps2, const ScanOptions& options) {
  ScanRecord r;
  r.gamma = data.law.gamma();
  r.data = data.states;
  r.rho_m = shock.rho_m;
  r.rho1 = rho1;
  r.eps2 = eps2;

  FanSubsolution sub;
  try {
    sub = solve_fan_subsolution(data, rho1, eps2, options.tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoSubsolution && e.kind() != ErrorKind::NoConvergence) throw;
    r.status = e.kind() == ErrorKind::NoSubsolution ? PointStatus::NoSubsolution
                                                    : PointStatus::NoConvergence;
    r.nu_minus = r.nu_plus = r.beta = r.eps1 = r.kappa = r.rate_diff = kNaN;
    return r;
  }
  r.nu_minus = sub.nu_minus;
  r.nu_plus = sub.nu_plus;
  r.beta = sub.beta;
  r.eps1 = sub.eps1;
  r.admissible = is_admissible(data, sub);

  const SelfSimilarFanField shock_field = two_shock_field(data, shock);
  const SelfSimilarFanField wild_field = wild_effective_field(data, sub);
  const ComparisonWindow window = default_window({&shock_field, &wild_field}, options.t_max,
                                                 options.padding, options.half_period);
  r.kappa = action_gap_coefficients(shock_field, wild_field, window).kappa;
  r.rate_diff = dissipation_rate(shock_field, window).interior -
                dissipation_rate(wild_field, window).interior;

  if (r.admissible) {
    CandidateSet set;
    set.candidates = {make_candidate(kTwoShockLabel, shock_field, window),
                      make_candidate(wild_label(rho1, eps2), wild_field, window)};
    const AdmissibilityReport report = evaluate_all(set);
    r.sarac_two_shock = report.verdict(Criterion::Sarac, kTwoShockLabel) == Verdict::StrictlyAdmissible;
    r.laap0_two_shock = report.verdict(Criterion::Laap0, kTwoShockLabel) == Verdict::StrictlyAdmissible;
    r.arac_two_shock = accepts(report.verdict(Criterion::Arac, kTwoShockLabel));
    r.dafermos_two_shock = accepts(report.verdict(Criterion::Dafermos, kTwoShockLabel));
  }
  return r;
}

std::vector<ScanRecord> scan_domain(const RiemannData& data, const ScanGrid& grid,
                                    const ScanOptions& options) {
  ScanGrid single = grid;
  single.gamma_points = {data.law.gamma()};
  single.data_cases = {data.states};
  single.allow_isothermal = grid.allow_isothermal || data.law.isothermal();
  return scan_grid(single, options);
}

std::vector<ScanRecord> scan_grid(const ScanGrid& grid, const ScanOptions& options) {
  validate_grid(grid);
  struct Case {
    RiemannData data;
    TwoShockSolution shock;
  };
  std::vector<Case> cases;
  for (double g : grid.gamma_points)
    for (const DataCase& c : grid.data_cases) {
      RiemannData data(GasLaw(g, grid.allow_isothermal), c);
      cases.push_back({data, solve_two_shock(data, options.tol)});
    }

  // One unit of work per (case, rho1): the eps2 row is evaluated in order.
  const std::size_t n_rho = grid.rho1_fractions.size();
  const std::size_t n_eps = grid.eps2_points.size();
  std::vector<ScanRecord> out(cases.size() * n_rho * n_eps);
  parallel_for(cases.size() * n_rho, options.threads, [&](std::size_t unit) {
    const Case& c = cases[unit / n_rho];
    const double rho1 = rho1_at(c.data, c.shock.rho_m, grid.rho1_fractions[unit % n_rho]);
    for (std::size_t j = 0; j < n_eps; ++j)
      out[unit * n_eps + j] = evaluate_point(c.data, c.shock, rho1, grid.eps2_points[j], options);
  });
  return out;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records) {
  out << "schema_version,gamma,rho_minus,rho_plus,v_minus,v_plus,rho1,eps2,admissible,"
         "nu_minus,nu_plus,beta,eps1,kappa,rate_diff,sarac_two_shock,laap0_two_shock,"
         "arac_two_shock,dafermos_two_shock,status\n";
  char line[1024];
  for (const ScanRecord& r : records) {
    std::snprintf(line, sizeof line,
                  "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%d,%d,%d,%d,%s\n",
                  kScanCsvSchemaVersion, r.gamma, r.data.rho_minus, r.data.rho_plus,
                  r.data.v_minus, r.data.v_plus, r.rho1, r.eps2, r.admissible ? 1 : 0,
                  r.nu_minus, r.nu_plus, r.beta, r.eps1, r.kappa, r.rate_diff,
                  r.sarac_two_shock ? 1 : 0, r.laap0_two_shock ? 1 : 0, r.arac_two_shock ? 1 : 0,
                  r.dafermos_two_shock ? 1 : 0, to_string(r.status));
    out << line;
  }
}

KappaCheck check_kappa_signs(const std::vector<ScanRecord>& records, bool negate) {
  KappaCheck check;
  check.points = records.size();
  for (const ScanRecord& r : records) {
    if (!r.admissible) continue;
    ++check.admissible;
    const double kappa = negate ? -r.kappa : r.kappa;
    if (!(kappa < 0.0)) check.violations.push_back(r);
  }
  return check;
}

KappaCheck verify_global_selection(const ScanGrid& grid, const ScanOptions& options) {
  for (double g : grid.gamma_points)
    if (g != 2.0) throw Error(ErrorKind::InvalidArgument, "global selection check needs gamma = 2 only");
  const std::vector<ScanRecord> records = scan_grid(grid, options);
  KappaCheck check = check_kappa_signs(records);
  std::size_t non_positive = 0;
  for (const ScanRecord& r : records)
    if (r.admissible && r.kappa <= 0.0) ++non_positive;
  check.detector_ok = check_kappa_signs(records, true).violations.size() == non_positive;
  return check;
}

std::vector<SweepRow> gamma_sweep(const ScanGrid& grid, const ScanOptions& options) {
  const std::vector<ScanRecord> records = scan_grid(grid, options);
  const std::size_t per_case = grid.rho1_fractions.size() * grid.eps2_points.size();
  std::vector<SweepRow> rows;
  const auto first_positive_eps2 =
      std::find_if(grid.eps2_points.begin(), grid.eps2_points.end(), [](double e) { return e > 0.0; });

  for (std::size_t c = 0; c * per_case < records.size(); ++c) {
    const auto begin = records.begin() + c * per_case;
    const auto end = begin + per_case;
    SweepRow row;
    row.gamma = begin->gamma;
    row.data = begin->data;
    row.rho_m = begin->rho_m;
    row.points = per_case;
    row.kappa_min = INFINITY;
    row.kappa_max = -INFINITY;
    double worst_violation = -INFINITY;  // highest rho1 with an admissible kappa >= 0
    for (auto it = begin; it != end; ++it) {
      if (!it->admissible) continue;
      ++row.admissible;
      if (it->kappa < 0.0) ++row.kappa_negative;
      else worst_violation = std::max(worst_violation, it->rho1);
      row.kappa_min = std::min(row.kappa_min, it->kappa);
      row.kappa_max = std::max(row.kappa_max, it->kappa);
    }
    if (row.admissible == 0) {
      row.fraction_negative = kNaN;
      row.kappa_min = row.kappa_max = kNaN;
    } else {
      row.fraction_negative = static_cast<double>(row.kappa_negative) / row.admissible;
      double lowest = INFINITY;
      for (auto it = begin; it != end; ++it)
        if (it->admissible && it->rho1 > worst_violation) lowest = std::min(lowest, it->rho1);
      if (std::isfinite(lowest)) row.kappa_negative_from = lowest;
    }
    if (first_positive_eps2 != grid.eps2_points.end()) {
      row.rho_star_eps2 = *first_positive_eps2;
      try {
        const RiemannData data(GasLaw(row.gamma, grid.allow_isothermal), row.data);
        row.rho_star = find_rho_star(data, row.rho_star_eps2).rho_star;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::EmptyInterval) throw;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

bool is_witness(const ScanRecord& r) {
  return r.admissible && r.rate_diff > 0.0 && r.sarac_two_shock && !r.dafermos_two_shock;
}

CounterexampleWitness to_witness(const ScanRecord& r, bool refined) {
  return {r.gamma, r.data, r.rho1, r.eps2, r.kappa, r.rate_diff, refined};
}

}  // namespace

std::optional<CounterexampleWitness> find_entropy_rate_counterexample(const ScanGrid& grid,
                                                                      const ScanOptions& options) {
  const std::vector<ScanRecord> coarse = scan_grid(grid, options);
  for (const ScanRecord& r : coarse)
    if (is_witness(r)) return to_witness(r, false);

  const ScanRecord* best = nullptr;
  for (const ScanRecord& r : coarse)
    if (r.admissible && (!best || r.rate_diff > best->rate_diff)) best = &r;
  if (!best) return std::nullopt;

  // Refine: a finer rho1 window around the best point and eps2 down to
  // three decades below it, where the dissipation excess is largest.
  const RiemannData data(GasLaw(best->gamma, grid.allow_isothermal), best->data);
  const TwoShockSolution shock = solve_two_shock(data, options.tol);
  const double floor = std::max(data.rho_minus(), data.rho_plus());
  const double step = (shock.rho_m - floor) / std::max<std::size_t>(grid.rho1_fractions.size(), 1);
  const double lo = std::max(floor + 0.5 * step, best->rho1 - step);
  const double hi = std::min(shock.rho_m, best->rho1 + step);
  constexpr int kRhoSteps = 40;
  constexpr int kEpsSteps = 30;
  for (int i = 0; i <= kRhoSteps; ++i) {
    const double rho1 = lo + (hi - lo) * i / kRhoSteps;
    for (int j = 0; j < kEpsSteps; ++j) {
      const double eps2 = best->eps2 * std::pow(10.0, -3.0 * (kEpsSteps - 1 - j) / (kEpsSteps - 1));
      const ScanRecord r = evaluate_point(data, shock, rho1, eps2, options);
      if (is_witness(r)) return to_witness(r, true);
    }
  }
  return std::nullopt;
}

ScanRecord replay_witness(const CounterexampleWitness& witness, bool allow_isothermal,
                          const ScanOptions& options) {
  const RiemannData data(GasLaw(witness.gamma, allow_isothermal), witness.data);
  return evaluate_point(data, solve_two_shock(data, options.tol), witness.rho1, witness.eps2,
                        options);
}

}  // namespace fanlab
