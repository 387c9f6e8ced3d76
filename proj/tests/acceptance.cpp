// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance [path-to-cli]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "action_oracle.hpp"
#include "fanlab/admissibility.hpp"
#include "fanlab/error.hpp"
#include "fanlab/scan.hpp"
#include "generators.hpp"

using namespace fanlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int hardware_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const RiemannData kSymmetric(GasLaw(2.0), {1.0, 1.0, 1.0, -1.0});

Outcome two_shock_exactness() {
  const auto start = std::chrono::steady_clock::now();
  const TwoShockSolution s = solve_two_shock(kSymmetric, 1e-12);
  const State l = left_state(kSymmetric), m = middle_state(s), r = right_state(kSymmetric);
  const double res_l = rh_residual(kSymmetric.law, l, m, s.nu_minus).norm();
  const double res_r = rh_residual(kSymmetric.law, m, r, s.nu_plus).norm();
  const double prod_l = entropy_production(kSymmetric.law, l, m, s.nu_minus);
  const double prod_r = entropy_production(kSymmetric.law, m, r, s.nu_plus);
  const double elapsed = seconds_since(start);
  const bool pass = res_l < 1e-10 && res_r < 1e-10 && std::abs(s.v_m) < 1e-12 &&
                    std::abs(s.nu_minus + s.nu_plus) < 1e-12 && prod_l >= 0.0 && prod_r >= 0.0 &&
                    elapsed < 0.010;
  return {pass, fmt("residuals %.2e %.2e, |v_m| %.1e, |nu- + nu+| %.1e, productions %.4f %.4f, "
                    "%.3f ms",
                    res_l, res_r, std::abs(s.v_m), std::abs(s.nu_minus + s.nu_plus), prod_l,
                    prod_r, elapsed * 1e3)};
}

Outcome subsolution_degeneration() {
  double worst = 0.0;
  std::vector<RiemannData> data = {kSymmetric};
  for (const DataCase& c : default_data_cases()) data.emplace_back(GasLaw(2.0), c);
  for (const RiemannData& d : data) {
    const TwoShockSolution s = solve_two_shock(d);
    for (double eps2 : {0.1, 0.5, 1.0}) {
      // The embedding at rho_m itself and the generic solve just below it.
      for (double rho1 : {s.rho_m, s.rho_m * (1.0 - 1e-13)}) {
        const FanSubsolution w = solve_fan_subsolution(d, rho1, eps2);
        worst = std::max({worst, std::abs(w.eps1), std::abs(w.beta * w.beta - s.v_m * s.v_m),
                          std::abs(w.nu_minus - s.nu_minus), std::abs(w.nu_plus - s.nu_plus)});
      }
    }
  }
  return {worst < 1e-8, fmt("max deviation %.2e over %zu data sets, both paths", worst, data.size())};
}

Outcome lagrangian_identity() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> eps(0.0, 2.0);
  const TwoShockSolution s = solve_two_shock(kSymmetric);
  double worst = 0.0;
  for (int n = 0; n < 10; ++n) {
    const double eps2 = eps(rng);
    const FanSubsolution w = solve_fan_subsolution(kSymmetric, s.rho_m, eps2);
    worst = std::max(worst, std::abs(lagrangian_diff_mid(kSymmetric, s, w) + 0.5 * s.rho_m * eps2));
  }
  return {worst < 1e-12, fmt("max |L_diff + rho_m eps2 / 2| = %.2e over 10 eps2", worst)};
}

Outcome derivative_ladder() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<DataCase> cases = default_data_cases();
  int sampled = 0, good = 0;
  double kappa_max = -INFINITY;
  while (sampled < 20) {
    const RiemannData d(GasLaw(1.2 + 1.8 * unit(rng)), cases[sampled % cases.size()]);
    const double eps2 = 0.01 + 0.3 * unit(rng);
    RhoStarInterval iv;
    try {
      iv = find_rho_star(d, eps2);
    } catch (const Error&) {
      continue;
    }
    const double rho1 = iv.rho_star + (iv.rho_m - iv.rho_star) * (0.01 + 0.98 * unit(rng));
    const TwoShockSolution s = solve_two_shock(d);
    const FanSubsolution w = solve_fan_subsolution(d, rho1, eps2);
    if (!is_admissible(d, w)) continue;
    const SelfSimilarFanField a = two_shock_field(d, s);
    const SelfSimilarFanField b = wild_effective_field(d, w);
    const std::vector<double> ladder =
        action_derivative_ladder(action_gap_coefficients(a, b, default_window({&a, &b})), 2);
    ++sampled;
    kappa_max = std::max(kappa_max, ladder[2]);
    good += ladder[0] == 0.0 && ladder[1] == 0.0 && ladder[2] < 0.0;
  }
  return {good == 20, fmt("%d/20 points with ladder (0, 0, <0); max kappa %.4g", good, kappa_max)};
}

Outcome global_selection() {
  ScanGrid g = default_scan_grid();
  g.gamma_points = {2.0};
  ScanOptions o;
  o.threads = hardware_threads();
  const auto start = std::chrono::steady_clock::now();
  const KappaCheck k = verify_global_selection(g, o);
  const double elapsed = seconds_since(start);
  return {k.violations.empty() && k.detector_ok && k.admissible > 0 && elapsed < 60.0,
          fmt("%zu points, %zu admissible, %zu with kappa >= 0, detector %s, %.2f s (%d threads)",
              k.points, k.admissible, k.violations.size(), k.detector_ok ? "ok" : "broken",
              elapsed, o.threads)};
}

Outcome gamma_sweep_evidence() {
  ScanOptions o;
  o.threads = hardware_threads();
  const std::vector<SweepRow> rows = gamma_sweep(default_scan_grid(), o);
  std::map<double, std::pair<std::size_t, std::size_t>> per_gamma;
  for (const SweepRow& r : rows) {
    per_gamma[r.gamma].first += r.kappa_negative;
    per_gamma[r.gamma].second += r.admissible;
  }
  bool all = true;
  std::string detail;
  for (const auto& [gamma, counts] : per_gamma) {
    const double frac = counts.second ? double(counts.first) / counts.second : NAN;
    all = all && counts.second > 0 && counts.first == counts.second;
    detail += fmt("%sgamma %.4g: %.2f%% of %zu", detail.empty() ? "" : "; ", gamma, 100.0 * frac,
                  counts.second);
  }
  return {all && per_gamma.size() == 6, detail};
}

Outcome entropy_rate_counterexample() {
  ScanOptions o;
  o.threads = hardware_threads();
  const std::optional<CounterexampleWitness> w =
      find_entropy_rate_counterexample(default_counterexample_grid(), o);
  if (!w) return {false, "no witness on the counterexample grid"};
  const ScanRecord r = replay_witness(*w);
  const bool replay = r.admissible && r.kappa == w->kappa && r.rate_diff == w->rate_diff &&
                      r.sarac_two_shock && !r.dafermos_two_shock;
  return {replay, fmt("gamma %.4g, data (%g, %g, %g, %g), rho1 %.17g, eps2 %.17g, kappa %.4g, "
                      "rate_diff %.4g, replay %s",
                      w->gamma, w->data.rho_minus, w->data.rho_plus, w->data.v_minus,
                      w->data.v_plus, w->rho1, w->eps2, w->kappa, w->rate_diff,
                      replay ? "identical" : "differs")};
}

ComparisonWindow covering_window(const std::vector<SelfSimilarFanField>& fields) {
  double lo = 0.0, hi = 0.0;
  for (const SelfSimilarFanField& f : fields)
    for (double s : f.speeds()) {
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  const double pad = kDefaultWindowPadding * (hi - lo);
  return {0.5, lo - pad, hi + pad, 1.0};
}

Outcome implication_chain() {
  ScanGrid g;
  g.rho1_fractions = uniform_fractions(40);
  g.eps2_points = uniform_eps2(10, 1.0);
  g.gamma_points = {1.4, 2.0, 3.0};
  g.data_cases = default_data_cases();
  std::map<std::pair<double, std::size_t>, std::vector<ScanRecord>> groups;
  for (const ScanRecord& r : scan_grid(g))
    if (r.admissible) {
      const std::size_t c =
          std::find(g.data_cases.begin(), g.data_cases.end(), r.data) - g.data_cases.begin();
      groups[{r.gamma, c}].push_back(r);
    }
  std::vector<const std::vector<ScanRecord>*> pools;
  for (const auto& [key, records] : groups)
    if (records.size() >= 3) pools.push_back(&records);
  if (pools.empty()) return {false, "no scanned instances"};

  std::mt19937_64 rng(11);
  int violations = 0, candidates = 0;
  for (int n = 0; n < 100; ++n) {
    const auto& pool = *pools[rng() % pools.size()];
    const RiemannData d(GasLaw(pool.front().gamma), pool.front().data);
    const TwoShockSolution s = solve_two_shock(d);
    std::vector<FanSubsolution> subs;
    const std::size_t count = 1 + rng() % 3;
    std::vector<std::size_t> picks;
    while (picks.size() < count) {
      const std::size_t i = rng() % pool.size();
      if (std::find(picks.begin(), picks.end(), i) == picks.end()) picks.push_back(i);
    }
    std::vector<SelfSimilarFanField> fields = {two_shock_field(d, s)};
    for (std::size_t i : picks) {
      subs.push_back(solve_fan_subsolution(d, pool[i].rho1, pool[i].eps2));
      fields.push_back(wild_effective_field(d, subs.back()));
    }
    CandidateSet set = make_candidate_set(d, s, subs, covering_window(fields));
    set.reference = rng() % set.candidates.size();
    candidates += set.candidates.size();
    violations += !implication_chain_violations(evaluate_all(set)).empty();
  }
  return {violations == 0,
          fmt("100 sets, %d candidates, %d reports violating the chain", candidates, violations)};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> time(0.1, 1.0);
  double worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const gen::Point p = gen::admissible(rng);
    const SelfSimilarFanField a = two_shock_field(p.data, p.shock);
    const SelfSimilarFanField b = wild_effective_field(p.data, p.sub);
    const ComparisonWindow w = default_window({&a, &b});
    const double t = time(rng);
    auto rel = [](double x, double y) { return std::abs(x - y) / std::max(std::abs(x), std::abs(y)); };
    worst = std::max({worst, rel(action(a, w, t), oracle::shock_action(p.data, p.shock, w, t)),
                      rel(action(b, w, t), oracle::wild_action(p.data, p.sub, w, t)),
                      rel(action_gap(p.data, p.shock, p.sub, w, t).value,
                          oracle::oracle_gap(p.data, p.shock, p.sub, w, t))});
  }
  const SelfSimilarFanField f = two_shock_field(kSymmetric, solve_two_shock(kSymmetric));
  std::vector<WeakResidual> levels;
  for (int res : {16, 32, 64}) levels.push_back(weak_residual(f, kDefaultMollificationWidth, res));
  bool decreasing = true;
  for (std::size_t k = 1; k < levels.size(); ++k)
    decreasing = decreasing && levels[k].mass < levels[k - 1].mass &&
                 levels[k].momentum < levels[k - 1].momentum;
  return {worst < 1e-8 && decreasing,
          fmt("max relative error %.2e on 20 instances; 2-shock mass residual %.2e > %.2e > %.2e, "
              "momentum %.2e > %.2e > %.2e",
              worst, levels[0].mass, levels[1].mass, levels[2].mass, levels[0].momentum,
              levels[1].momentum, levels[2].momentum)};
}

Outcome monotonicity() {
  const ScanGrid g = default_scan_grid();
  std::size_t rays = 0, steps = 0, bad = 0, empty = 0;
  for (double gamma : g.gamma_points)
    for (const DataCase& c : g.data_cases) {
      const RiemannData d(GasLaw(gamma), c);
      for (double eps2 : g.eps2_points) {
        RhoStarInterval iv;
        try {
          iv = find_rho_star(d, eps2);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::EmptyInterval) throw;
          ++empty;
          continue;
        }
        ++rays;
        std::optional<FanSubsolution> prev;
        for (double f : g.rho1_fractions) {
          const double rho1 = iv.rho_star + f * (iv.rho_m - iv.rho_star);
          const FanSubsolution cur = solve_fan_subsolution(d, rho1, eps2);
          if (prev) {
            ++steps;
            bad += !(cur.nu_minus > prev->nu_minus && cur.nu_plus < prev->nu_plus);
          }
          prev = cur;
        }
      }
    }
  return {bad == 0 && rays > 0,
          fmt("%zu I* rays (%zu eps2 values with empty I*), %zu adjacent pairs, %zu not strictly "
              "monotone",
              rays, empty, steps, bad)};
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* p = popen(command.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  if (pclose(p) != 0) out = "<failed: " + command + ">";
  return out;
}

Outcome determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  const std::string one = cli + " scan --rho1-count 1 --eps2-count 1 2>/dev/null";
  const std::string a = capture(one), b = capture(one);
  const std::string grid = cli + " scan --gammas 1.4,2,3 --rho1-count 60 --eps2-count 20";
  const std::string j1 = capture(grid + " -j 1 2>/dev/null");
  const std::string j8 = capture(grid + " -j 8 2>/dev/null");
  const auto lines = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
  const bool pass = !a.empty() && a == b && lines(a) == 2 && !j1.empty() && j1 == j8 &&
                    lines(j1) == 1 + 3 * 60 * 20;
  return {pass, fmt("single-point scan %s across two runs (%zu bytes); 3600-point scan %s for "
                    "-j1 and -j8 (%zu bytes)",
                    a == b ? "identical" : "differs", a.size(), j1 == j8 ? "identical" : "differs",
                    j1.size())};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"2-shock exactness", two_shock_exactness},
      {"sub-solution degeneration", subsolution_degeneration},
      {"L_diff identity", lagrangian_identity},
      {"derivative ladder", derivative_ladder},
      {"global selection at gamma = 2", global_selection},
      {"gamma-sweep evidence", gamma_sweep_evidence},
      {"entropy-rate counterexample", entropy_rate_counterexample},
      {"implication chain", implication_chain},
      {"oracle equivalence", oracle_equivalence},
      {"monotonicity on I*", monotonicity},
      {"determinism", [&] { return determinism(cli); }},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
