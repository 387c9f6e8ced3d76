#include "fanlab/fanlab.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "fanlab/error.hpp"
#include "fanlab/serialize.hpp"

using namespace fanlab;

struct fanlab_grid {
  ScanGrid grid;
};

struct fanlab_scan {
  std::vector<ScanRecord> records;
};

struct fanlab_comparison {
  RiemannData data;
  TwoShockSolution shock;
  FanSubsolution sub;
  bool admissible;
  SelfSimilarFanField shock_field;
  SelfSimilarFanField wild_field;
  ComparisonWindow window;
  ActionGap gap;
  DissipationRate shock_rate;
  DissipationRate wild_rate;
  std::string wild;
  AdmissibilityReport report;
};

namespace {

thread_local std::string last_error;

fanlab_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return FANLAB_ERR_INVALID_ARGUMENT;
    case ErrorKind::NonPositiveDensity: return FANLAB_ERR_NON_POSITIVE_DENSITY;
    case ErrorKind::DomainError: return FANLAB_ERR_DOMAIN;
    case ErrorKind::NoTwoShock: return FANLAB_ERR_NO_TWO_SHOCK;
    case ErrorKind::NoConvergence: return FANLAB_ERR_NO_CONVERGENCE;
    case ErrorKind::NoSubsolution: return FANLAB_ERR_NO_SUBSOLUTION;
    case ErrorKind::EmptyInterval: return FANLAB_ERR_EMPTY_INTERVAL;
    case ErrorKind::WindowTooSmall: return FANLAB_ERR_WINDOW_TOO_SMALL;
    case ErrorKind::UnsupportedOrder: return FANLAB_ERR_UNSUPPORTED_ORDER;
    case ErrorKind::TieUnresolved: return FANLAB_ERR_TIE_UNRESOLVED;
    case ErrorKind::QuadratureFailure: return FANLAB_ERR_QUADRATURE_FAILURE;
  }
  return FANLAB_ERR_INTERNAL;
}

template <class F>
fanlab_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return FANLAB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return FANLAB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return FANLAB_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must not be null");
}

DataCase to_case(const fanlab_case& c) { return {c.rho_minus, c.rho_plus, c.v_minus, c.v_plus}; }
fanlab_case from_case(const DataCase& c) { return {c.rho_minus, c.rho_plus, c.v_minus, c.v_plus}; }

RiemannData to_data(const fanlab_data* d) {
  require(d, "data");
  return RiemannData(GasLaw(d->gamma, d->allow_isothermal != 0), to_case(d->states));
}

TwoShockSolution to_shock(const fanlab_two_shock& s) { return {s.rho_m, s.v_m, s.nu_minus, s.nu_plus}; }

FanSubsolution to_sub(const fanlab_subsolution& s) {
  FanSubsolution out;
  out.rho1 = s.rho1;
  out.eps2 = s.eps2;
  out.nu_minus = s.nu_minus;
  out.nu_plus = s.nu_plus;
  out.alpha = s.alpha;
  out.beta = s.beta;
  out.u11 = s.u11;
  out.u12 = s.u12;
  out.eps1 = s.eps1;
  out.C = s.C;
  out.effective_pressure = s.effective_pressure;
  return out;
}

fanlab_subsolution from_sub(const FanSubsolution& s) {
  return {s.rho1, s.eps2, s.nu_minus, s.nu_plus, s.alpha, s.beta,
          s.u11,  s.u12,  s.eps1,     s.C,       s.effective_pressure};
}

ScanOptions to_options(const fanlab_scan_options* o) {
  ScanOptions out;
  if (!o) return out;
  if (o->threads < 1) throw Error(ErrorKind::InvalidArgument, "threads must be at least 1");
  if (!(o->t_max > 0.0) || !(o->padding > 0.0) || !(o->half_period > 0.0) || !(o->tol > 0.0))
    throw Error(ErrorKind::InvalidArgument, "t_max, padding, half_period and tol must be positive");
  out.threads = o->threads;
  out.t_max = o->t_max;
  out.padding = o->padding;
  out.half_period = o->half_period;
  out.tol = o->tol;
  return out;
}

void emit(const std::string& s, char** out) {
  require(out, "output");
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
}

json window_json(const ComparisonWindow& w) {
  return {{"half_period", w.half_period}, {"ell1", w.ell1}, {"ell2", w.ell2}, {"t_max", w.t_max}};
}

json data_json(const RiemannData& d) {
  json j = d.states;
  j["gamma"] = d.law.gamma();
  j["allow_isothermal"] = d.law.isothermal();
  return j;
}

}  // namespace

extern "C" {

const char* fanlab_version(void) { return "0.1.0"; }

const char* fanlab_last_error(void) { return last_error.c_str(); }

const char* fanlab_status_string(fanlab_status status) {
  switch (status) {
    case FANLAB_OK: return "ok";
    case FANLAB_ERR_INVALID_ARGUMENT: return to_string(ErrorKind::InvalidArgument);
    case FANLAB_ERR_NON_POSITIVE_DENSITY: return to_string(ErrorKind::NonPositiveDensity);
    case FANLAB_ERR_DOMAIN: return to_string(ErrorKind::DomainError);
    case FANLAB_ERR_NO_TWO_SHOCK: return to_string(ErrorKind::NoTwoShock);
    case FANLAB_ERR_NO_CONVERGENCE: return to_string(ErrorKind::NoConvergence);
    case FANLAB_ERR_NO_SUBSOLUTION: return to_string(ErrorKind::NoSubsolution);
    case FANLAB_ERR_EMPTY_INTERVAL: return to_string(ErrorKind::EmptyInterval);
    case FANLAB_ERR_WINDOW_TOO_SMALL: return to_string(ErrorKind::WindowTooSmall);
    case FANLAB_ERR_UNSUPPORTED_ORDER: return to_string(ErrorKind::UnsupportedOrder);
    case FANLAB_ERR_TIE_UNRESOLVED: return to_string(ErrorKind::TieUnresolved);
    case FANLAB_ERR_QUADRATURE_FAILURE: return to_string(ErrorKind::QuadratureFailure);
    case FANLAB_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void fanlab_string_free(char* s) { std::free(s); }

fanlab_scan_options fanlab_scan_options_default(void) {
  const ScanOptions o;
  return {o.threads, o.t_max, o.padding, o.half_period, o.tol};
}

fanlab_status fanlab_two_shock_exists(const fanlab_data* data, int* exists, double* discriminant) {
  return guard([&] {
    const RiemannData d = to_data(data);
    if (exists) *exists = two_shock_exists(d) ? 1 : 0;
    if (discriminant) *discriminant = two_shock_discriminant(d);
  });
}

fanlab_status fanlab_solve_two_shock(const fanlab_data* data, double tol, fanlab_two_shock* out) {
  return guard([&] {
    require(out, "output");
    const TwoShockSolution s = solve_two_shock(to_data(data), tol);
    *out = {s.rho_m, s.v_m, s.nu_minus, s.nu_plus};
  });
}

fanlab_status fanlab_check_two_shock(const fanlab_data* data, const fanlab_two_shock* shock,
                                     fanlab_two_shock_check* out) {
  return guard([&] {
    require(shock, "shock");
    require(out, "output");
    const RiemannData d = to_data(data);
    const TwoShockSolution s = to_shock(*shock);
    const State l = left_state(d), m = middle_state(s), r = right_state(d);
    out->residual_left = rh_residual(d.law, l, m, s.nu_minus).norm();
    out->residual_right = rh_residual(d.law, m, r, s.nu_plus).norm();
    out->production_left = entropy_production(d.law, l, m, s.nu_minus);
    out->production_right = entropy_production(d.law, m, r, s.nu_plus);
  });
}

fanlab_status fanlab_solve_subsolution(const fanlab_data* data, double rho1, double eps2,
                                       double tol, fanlab_subsolution* out) {
  return guard([&] {
    require(out, "output");
    *out = from_sub(solve_fan_subsolution(to_data(data), rho1, eps2, tol));
  });
}

fanlab_status fanlab_check_subsolution(const fanlab_data* data, const fanlab_subsolution* sub,
                                       fanlab_subsolution_check* out) {
  return guard([&] {
    require(sub, "sub-solution");
    require(out, "output");
    const RiemannData d = to_data(data);
    const FanSubsolution s = to_sub(*sub);
    out->residual_norm = residual_norm(subsolution_residual(d, s));
    const auto [left, right] = subsolution_entropy_production(d, s);
    out->production_left = left;
    out->production_right = right;
    out->admissible = is_admissible(d, s) ? 1 : 0;
  });
}

fanlab_status fanlab_find_rho_star(const fanlab_data* data, double eps2, double tol,
                                   double* rho_star, double* rho_m) {
  return guard([&] {
    const RhoStarInterval iv = find_rho_star(to_data(data), eps2, tol);
    if (rho_star) *rho_star = iv.rho_star;
    if (rho_m) *rho_m = iv.rho_m;
  });
}

fanlab_status fanlab_compare(const fanlab_data* data, double rho1, double eps2,
                             const fanlab_scan_options* options, fanlab_comparison** out) {
  return guard([&] {
    require(out, "output");
    const ScanOptions o = to_options(options);
    const RiemannData d = to_data(data);
    const TwoShockSolution shock = solve_two_shock(d, o.tol);
    const FanSubsolution sub = rho1 == shock.rho_m ? embed_two_shock(d, shock, eps2)
                                                   : solve_fan_subsolution(d, rho1, eps2, o.tol);
    SelfSimilarFanField sf = two_shock_field(d, shock);
    SelfSimilarFanField wf = wild_effective_field(d, sub);
    const ComparisonWindow w = default_window({&sf, &wf}, o.t_max, o.padding, o.half_period);
    std::string wild = wild_label(sub.rho1, eps2);
    CandidateSet set;
    set.candidates = {make_candidate(kTwoShockLabel, sf, w), make_candidate(wild, wf, w)};
    AdmissibilityReport report = evaluate_all(set);
    *out = new fanlab_comparison{d,
                                 shock,
                                 sub,
                                 is_admissible(d, sub),
                                 sf,
                                 wf,
                                 w,
                                 action_gap_coefficients(sf, wf, w),
                                 dissipation_rate(sf, w),
                                 dissipation_rate(wf, w),
                                 std::move(wild),
                                 std::move(report)};
  });
}

void fanlab_comparison_free(fanlab_comparison* c) { delete c; }

fanlab_status fanlab_comparison_summary(const fanlab_comparison* c, double* kappa,
                                        double* rate_diff, int* admissible) {
  return guard([&] {
    require(c, "comparison");
    if (kappa) *kappa = c->gap.kappa;
    if (rate_diff) *rate_diff = c->shock_rate.interior - c->wild_rate.interior;
    if (admissible) *admissible = c->admissible ? 1 : 0;
  });
}

fanlab_status fanlab_comparison_verdict(const fanlab_comparison* c, const char* criterion,
                                        const char* label, fanlab_verdict* out) {
  return guard([&] {
    require(c, "comparison");
    require(criterion, "criterion");
    require(label, "label");
    require(out, "output");
    const auto crit = criterion_from_string(criterion);
    if (!crit) throw Error(ErrorKind::InvalidArgument, std::string("unknown criterion ") + criterion);
    const std::string name = std::strcmp(label, "wild") == 0 ? c->wild : std::string(label);
    *out = static_cast<fanlab_verdict>(c->report.verdict(*crit, name));
  });
}

fanlab_status fanlab_comparison_json(const fanlab_comparison* c, char** out) {
  return guard([&] {
    require(c, "comparison");
    json j;
    j["data"] = data_json(c->data);
    j["two_shock"] = c->shock;
    j["subsolution"] = c->sub;
    j["admissible"] = c->admissible;
    j["window"] = window_json(c->window);
    j["gap"] = c->gap;
    j["dissipation"] = {{"two_shock", number_to_json(-c->shock_rate.interior)},
                        {"wild", number_to_json(-c->wild_rate.interior)}};
    j["rate_diff"] = number_to_json(c->shock_rate.interior - c->wild_rate.interior);
    j["wild_label"] = c->wild;
    j["report"] = c->report;
    json curve = json::array();
    for (int i = 0; i <= 20; ++i) {
      const double t = c->window.t_max * i / 20;
      curve.push_back({{"t", t}, {"gap", number_to_json(c->gap.value(t))}});
    }
    j["curve"] = curve;
    emit(j.dump(2) + "\n", out);
  });
}

fanlab_status fanlab_comparison_curve_csv(const fanlab_comparison* c, int samples, char** out) {
  return guard([&] {
    require(c, "comparison");
    if (samples < 2) throw Error(ErrorKind::InvalidArgument, "need at least two samples");
    const ActionPolynomial a = action_polynomial(c->shock_field, c->window);
    const ActionPolynomial b = action_polynomial(c->wild_field, c->window);
    std::string csv = "schema_version,t,action_two_shock,action_wild,gap\n";
    char line[256];
    for (int i = 0; i < samples; ++i) {
      const double t = c->window.t_max * i / (samples - 1);
      std::snprintf(line, sizeof line, "1,%.17g,%.17g,%.17g,%.17g\n", t, a(t), b(t),
                    c->gap.value(t));
      csv += line;
    }
    emit(csv, out);
  });
}

fanlab_status fanlab_comparison_field_csv(const fanlab_comparison* c, double t, int samples,
                                          char** out) {
  return guard([&] {
    require(c, "comparison");
    if (samples < 2) throw Error(ErrorKind::InvalidArgument, "need at least two samples");
    if (!(t > 0.0)) throw Error(ErrorKind::InvalidArgument, "sampling time must be positive");
    std::string csv = "schema_version,field,t,x2,rho,v2,E,L\n";
    char line[320];
    for (const SelfSimilarFanField* f : {&c->shock_field, &c->wild_field})
      for (int i = 0; i < samples; ++i) {
        const double x = c->window.ell1 + (c->window.ell2 - c->window.ell1) * i / (samples - 1);
        const RegionState& r = f->evaluate(t, x);
        std::snprintf(line, sizeof line, "1,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      to_string(f->kind()), t, x, r.rho, r.v2, r.energy, r.lagrangian);
        csv += line;
      }
    emit(csv, out);
  });
}

fanlab_status fanlab_grid_default(fanlab_grid** out) {
  return guard([&] {
    require(out, "output");
    *out = new fanlab_grid{default_scan_grid()};
  });
}

fanlab_status fanlab_grid_counterexample_default(fanlab_grid** out) {
  return guard([&] {
    require(out, "output");
    *out = new fanlab_grid{default_counterexample_grid()};
  });
}

void fanlab_grid_free(fanlab_grid* g) { delete g; }

namespace {

std::vector<double> to_vector(const double* values, size_t n) {
  if (n > 0) require(values, "values");
  return std::vector<double>(values, values + n);
}

// Applies `change` to a copy and keeps it only if every axis validates.
extern "C++" template <class F>
fanlab_status update_grid(fanlab_grid* g, F change) {
  return guard([&] {
    require(g, "grid");
    ScanGrid next = g->grid;
    change(next);
    validate_axes(next);
    g->grid = std::move(next);
  });
}

}  // namespace

fanlab_status fanlab_grid_set_rho1_fractions(fanlab_grid* g, const double* values, size_t n) {
  return update_grid(g, [&](ScanGrid& next) { next.rho1_fractions = to_vector(values, n); });
}

fanlab_status fanlab_grid_set_eps2(fanlab_grid* g, const double* values, size_t n) {
  return update_grid(g, [&](ScanGrid& next) { next.eps2_points = to_vector(values, n); });
}

fanlab_status fanlab_grid_set_gammas(fanlab_grid* g, const double* values, size_t n) {
  return update_grid(g, [&](ScanGrid& next) { next.gamma_points = to_vector(values, n); });
}

fanlab_status fanlab_grid_set_cases(fanlab_grid* g, const fanlab_case* cases, size_t n) {
  return update_grid(g, [&](ScanGrid& next) {
    if (n > 0) require(cases, "cases");
    next.data_cases.clear();
    for (size_t i = 0; i < n; ++i) next.data_cases.push_back(to_case(cases[i]));
  });
}

fanlab_status fanlab_grid_set_allow_isothermal(fanlab_grid* g, int allow) {
  return update_grid(g, [&](ScanGrid& next) { next.allow_isothermal = allow != 0; });
}

fanlab_status fanlab_grid_json(const fanlab_grid* g, char** out) {
  return guard([&] {
    require(g, "grid");
    json j;
    j["rho1_fractions"] = g->grid.rho1_fractions;
    j["eps2"] = g->grid.eps2_points;
    j["gamma"] = g->grid.gamma_points;
    j["cases"] = g->grid.data_cases;
    j["allow_isothermal"] = g->grid.allow_isothermal;
    emit(j.dump(2) + "\n", out);
  });
}

fanlab_status fanlab_scan_run(const fanlab_grid* g, const fanlab_scan_options* options,
                              fanlab_scan** out) {
  return guard([&] {
    require(g, "grid");
    require(out, "output");
    *out = new fanlab_scan{scan_grid(g->grid, to_options(options))};
  });
}

void fanlab_scan_free(fanlab_scan* s) { delete s; }

size_t fanlab_scan_size(const fanlab_scan* s) { return s ? s->records.size() : 0; }

fanlab_status fanlab_scan_record_at(const fanlab_scan* s, size_t i, fanlab_scan_record* out) {
  return guard([&] {
    require(s, "scan");
    require(out, "output");
    if (i >= s->records.size()) throw Error(ErrorKind::InvalidArgument, "record index out of range");
    const ScanRecord& r = s->records[i];
    *out = {r.gamma,
            from_case(r.data),
            r.rho_m,
            r.rho1,
            r.eps2,
            static_cast<int>(r.status),
            r.admissible ? 1 : 0,
            r.nu_minus,
            r.nu_plus,
            r.beta,
            r.eps1,
            r.kappa,
            r.rate_diff,
            r.sarac_two_shock ? 1 : 0,
            r.laap0_two_shock ? 1 : 0,
            r.arac_two_shock ? 1 : 0,
            r.dafermos_two_shock ? 1 : 0};
  });
}

fanlab_status fanlab_scan_csv(const fanlab_scan* s, char** out) {
  return guard([&] {
    require(s, "scan");
    std::ostringstream csv;
    write_scan_csv(csv, s->records);
    emit(csv.str(), out);
  });
}

fanlab_status fanlab_scan_json(const fanlab_scan* s, char** out) {
  return guard([&] {
    require(s, "scan");
    json j = {{"schema_version", kScanCsvSchemaVersion}, {"records", s->records}};
    emit(j.dump(2) + "\n", out);
  });
}

fanlab_status fanlab_verify_global_selection(const fanlab_grid* g,
                                             const fanlab_scan_options* options,
                                             size_t* violations, char** out) {
  return guard([&] {
    require(g, "grid");
    const KappaCheck check = verify_global_selection(g->grid, to_options(options));
    if (violations) *violations = check.violations.size();
    if (out) {
      json j = check;
      j["cases"] = g->grid.data_cases;
      j["cases_note"] = "data cases are artifact choices; no case list is prescribed";
      emit(j.dump(2) + "\n", out);
    }
  });
}

fanlab_status fanlab_gamma_sweep(const fanlab_grid* g, const fanlab_scan_options* options,
                                 char** out) {
  return guard([&] {
    require(g, "grid");
    const std::vector<SweepRow> rows = gamma_sweep(g->grid, to_options(options));
    json per_gamma = json::array();
    for (double gamma : g->grid.gamma_points) {
      std::size_t admissible = 0, negative = 0;
      for (const SweepRow& r : rows)
        if (r.gamma == gamma) {
          admissible += r.admissible;
          negative += r.kappa_negative;
        }
      json row = {{"gamma", gamma}, {"admissible", admissible}, {"kappa_negative", negative}};
      row["fraction_negative"] =
          number_to_json(admissible ? static_cast<double>(negative) / admissible : NAN);
      row["violations"] = admissible - negative;
      per_gamma.push_back(row);
    }
    json j = {{"per_gamma", per_gamma}, {"rows", rows}};
    j["cases_note"] = "data cases are artifact choices; no case list is prescribed";
    emit(j.dump(2) + "\n", out);
  });
}

fanlab_status fanlab_find_counterexample(const fanlab_grid* g, const fanlab_scan_options* options,
                                         int* found, char** out) {
  return guard([&] {
    require(g, "grid");
    const ScanOptions o = to_options(options);
    const auto witness = find_entropy_rate_counterexample(g->grid, o);
    if (found) *found = witness ? 1 : 0;
    if (!out) return;
    json j;
    if (witness) {
      j["witness"] = *witness;
      const ScanRecord replay = replay_witness(*witness, g->grid.allow_isothermal, o);
      j["replay"] = replay;
      j["replay_confirms"] = replay.admissible && replay.rate_diff > 0.0 && replay.kappa < 0.0 &&
                             replay.sarac_two_shock && !replay.dafermos_two_shock;
    } else {
      j["witness"] = nullptr;
    }
    emit(j.dump(2) + "\n", out);
  });
}

fanlab_status fanlab_verify_fields(const fanlab_data* data, double rho1, double eps2,
                                   double width, int resolution, int levels, double tol,
                                   int* decreasing, char** out) {
  return guard([&] {
    if (levels < 1) throw Error(ErrorKind::InvalidArgument, "need at least one refinement level");
    const RiemannData d = to_data(data);
    const TwoShockSolution shock = solve_two_shock(d, tol);
    std::vector<std::pair<std::string, SelfSimilarFanField>> fields;
    fields.emplace_back("2-shock", two_shock_field(d, shock));
    if (rho1 > 0.0)
      fields.emplace_back(wild_label(rho1, eps2),
                          wild_effective_field(d, solve_fan_subsolution(d, rho1, eps2, tol)));
    bool monotone = true;
    json list = json::array();
    for (const auto& [label, field] : fields) {
      json levels_json = json::array();
      double previous = INFINITY;
      for (int level = 0; level <= levels; ++level) {
        const int n = resolution << level;
        const WeakResidual r = weak_residual(field, width, n);
        const double worst = std::max(r.mass, r.momentum);
        if (!(worst < previous)) monotone = false;
        previous = worst;
        levels_json.push_back({{"resolution", n},
                               {"mass", r.mass},
                               {"momentum", r.momentum},
                               {"energy_min", r.energy_min},
                               {"energy_max", r.energy_max},
                               {"test_functions", r.test_functions}});
      }
      list.push_back({{"field", label}, {"levels", levels_json}});
    }
    if (decreasing) *decreasing = monotone ? 1 : 0;
    if (out) {
      json j = {{"width", width}, {"fields", list}, {"decreasing", monotone}};
      emit(j.dump(2) + "\n", out);
    }
  });
}

}  // extern "C"
