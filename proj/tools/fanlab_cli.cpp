// Command-line front end. Talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fanlab/fanlab.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kBadConfig = 1, kNoTwoShock = 2, kNoConvergence = 3, kInadmissible = 4 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library failure carrying the exit code it maps to.
struct Failure : std::runtime_error {
  Failure(int code_, const std::string& what) : std::runtime_error(what), code(code_) {}
  int code;
};

int exit_code(fanlab_status s) {
  switch (s) {
    case FANLAB_OK: return kOk;
    case FANLAB_ERR_NO_TWO_SHOCK: return kNoTwoShock;
    case FANLAB_ERR_NO_CONVERGENCE: return kNoConvergence;
    case FANLAB_ERR_NO_SUBSOLUTION:
    case FANLAB_ERR_EMPTY_INTERVAL: return kInadmissible;
    default: return kBadConfig;
  }
}

void check(fanlab_status s) {
  if (s != FANLAB_OK)
    throw Failure(exit_code(s), std::string(fanlab_status_string(s)) + ": " + fanlab_last_error());
}

struct CString {
  char* p = nullptr;
  ~CString() { fanlab_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

using Grid = Handle<fanlab_grid, fanlab_grid_free>;
using Scan = Handle<fanlab_scan, fanlab_scan_free>;
using Comparison = Handle<fanlab_comparison, fanlab_comparison_free>;

// ---------------------------------------------------------------------------
// Configuration

struct GridConfig {
  std::string preset = "default";  // default | counterexample
  std::optional<std::vector<double>> rho1_fractions;
  std::optional<std::vector<double>> eps2;
  std::optional<std::vector<double>> gammas;
  std::optional<std::vector<fanlab_case>> cases;
};

struct RunConfig {
  fanlab_data data{2.0, 0, {1.0, 1.0, 1.0, -1.0}};
  fanlab_scan_options options = fanlab_scan_options_default();
  double rho_star_tol = 1e-10;
  std::optional<std::string> rho1;  // number or "rho_m"
  double eps2 = 0.5;
  double width = 0.25;
  int resolution = 64;
  int levels = 2;
  GridConfig grid;
  std::string output = "-";
  std::string format = "csv";  // scan output only
  std::string curve_output;
  std::string field_output;
  int samples = 201;
  double field_time = 1.0;
};

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ConfigError(what + " must be a number");
  return j.get<double>();
}

double positive(const json& j, const std::string& what) {
  const double x = number(j, what);
  if (!(x > 0.0)) throw ConfigError(what + " must be positive");
  return x;
}

int positive_int(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw ConfigError(what + " must be a positive integer");
  return j.get<int>();
}

std::vector<double> number_list(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ConfigError(what + " must be a non-empty array of numbers");
  std::vector<double> out;
  for (const json& x : j) out.push_back(number(x, what));
  return out;
}

// Either an explicit list or {"count": n[, "max": m]} for evenly spaced
// points k * max / n, k = 1..n.
std::vector<double> spaced_list(const json& j, const std::string& what, double default_max) {
  if (j.is_array()) return number_list(j, what);
  only_keys(j, what, {"count", "max"});
  const int n = positive_int(j.at("count"), what + ".count");
  const double max = j.contains("max") ? positive(j.at("max"), what + ".max") : default_max;
  std::vector<double> out;
  for (int k = 1; k <= n; ++k) out.push_back(max * k / n);
  return out;
}

// Keys missing from `j` keep their value in `base`; without a base all four
// are required.
fanlab_case parse_case(const json& j, const std::string& where,
                       std::optional<fanlab_case> base = std::nullopt) {
  only_keys(j, where, {"rho_minus", "rho_plus", "v_minus", "v_plus"});
  if (!base)
    for (const char* k : {"rho_minus", "rho_plus", "v_minus", "v_plus"})
      if (!j.contains(k)) throw ConfigError(where + " is missing '" + k + "'");
  fanlab_case c = base.value_or(fanlab_case{});
  if (j.contains("rho_minus")) c.rho_minus = positive(j.at("rho_minus"), where + ".rho_minus");
  if (j.contains("rho_plus")) c.rho_plus = positive(j.at("rho_plus"), where + ".rho_plus");
  if (j.contains("v_minus")) c.v_minus = number(j.at("v_minus"), where + ".v_minus");
  if (j.contains("v_plus")) c.v_plus = number(j.at("v_plus"), where + ".v_plus");
  return c;
}

RunConfig parse_config(const json& j) {
  RunConfig c;
  only_keys(j, "config", {"data", "window", "grid", "tolerances", "point", "quadrature", "threads", "output"});
  if (j.contains("data")) {
    const json& d = j.at("data");
    only_keys(d, "data", {"gamma", "allow_isothermal", "rho_minus", "rho_plus", "v_minus", "v_plus"});
    json states = json::object();
    for (const char* k : {"rho_minus", "rho_plus", "v_minus", "v_plus"})
      if (d.contains(k)) states[k] = d.at(k);
    c.data.states = parse_case(states, "data", c.data.states);
    if (d.contains("gamma")) c.data.gamma = positive(d.at("gamma"), "data.gamma");
    if (d.contains("allow_isothermal")) {
      if (!d.at("allow_isothermal").is_boolean()) throw ConfigError("data.allow_isothermal must be a boolean");
      c.data.allow_isothermal = d.at("allow_isothermal").get<bool>() ? 1 : 0;
    }
  }
  if (j.contains("window")) {
    const json& w = j.at("window");
    only_keys(w, "window", {"L3", "padding", "t_max"});
    if (w.contains("L3")) c.options.half_period = positive(w.at("L3"), "window.L3");
    if (w.contains("padding")) c.options.padding = positive(w.at("padding"), "window.padding");
    if (w.contains("t_max")) c.options.t_max = positive(w.at("t_max"), "window.t_max");
  }
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    only_keys(t, "tolerances", {"solver", "rho_star"});
    if (t.contains("solver")) c.options.tol = positive(t.at("solver"), "tolerances.solver");
    if (t.contains("rho_star")) c.rho_star_tol = positive(t.at("rho_star"), "tolerances.rho_star");
  }
  if (j.contains("point")) {
    const json& p = j.at("point");
    only_keys(p, "point", {"rho1", "eps2"});
    if (p.contains("rho1")) {
      const json& r = p.at("rho1");
      if (r.is_string() && r.get<std::string>() == "rho_m") {
        c.rho1 = "rho_m";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", positive(r, "point.rho1"));
        c.rho1 = buf;
      }
    }
    if (p.contains("eps2")) {
      c.eps2 = number(p.at("eps2"), "point.eps2");
      if (!(c.eps2 >= 0.0)) throw ConfigError("point.eps2 must be nonnegative");
    }
  }
  if (j.contains("quadrature")) {
    const json& q = j.at("quadrature");
    only_keys(q, "quadrature", {"width", "resolution", "levels"});
    if (q.contains("width")) c.width = positive(q.at("width"), "quadrature.width");
    if (q.contains("resolution")) c.resolution = positive_int(q.at("resolution"), "quadrature.resolution");
    if (q.contains("levels")) c.levels = positive_int(q.at("levels"), "quadrature.levels");
  }
  if (j.contains("threads")) c.options.threads = positive_int(j.at("threads"), "threads");
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    only_keys(g, "grid", {"preset", "rho1_fractions", "eps2", "gamma", "cases"});
    if (g.contains("preset")) {
      if (!g.at("preset").is_string()) throw ConfigError("grid.preset must be a string");
      c.grid.preset = g.at("preset").get<std::string>();
      if (c.grid.preset != "default" && c.grid.preset != "counterexample")
        throw ConfigError("grid.preset must be 'default' or 'counterexample'");
    }
    if (g.contains("rho1_fractions")) c.grid.rho1_fractions = spaced_list(g.at("rho1_fractions"), "grid.rho1_fractions", 1.0);
    if (g.contains("eps2")) c.grid.eps2 = spaced_list(g.at("eps2"), "grid.eps2", 2.0);
    if (g.contains("gamma")) c.grid.gammas = number_list(g.at("gamma"), "grid.gamma");
    if (g.contains("cases")) {
      const json& cs = g.at("cases");
      if (!cs.is_array() || cs.empty()) throw ConfigError("grid.cases must be a non-empty array");
      std::vector<fanlab_case> cases;
      for (std::size_t i = 0; i < cs.size(); ++i)
        cases.push_back(parse_case(cs[i], "grid.cases[" + std::to_string(i) + "]"));
      c.grid.cases = cases;
    }
  }
  if (j.contains("output")) {
    const json& o = j.at("output");
    only_keys(o, "output", {"path", "format", "curve_path", "field_path", "samples", "field_time"});
    auto str = [&](const char* k) {
      if (!o.at(k).is_string()) throw ConfigError(std::string("output.") + k + " must be a string");
      return o.at(k).get<std::string>();
    };
    if (o.contains("path")) c.output = str("path");
    if (o.contains("format")) {
      c.format = str("format");
      if (c.format != "csv" && c.format != "json") throw ConfigError("output.format must be 'csv' or 'json'");
    }
    if (o.contains("curve_path")) c.curve_output = str("curve_path");
    if (o.contains("field_path")) c.field_output = str("field_path");
    if (o.contains("samples")) c.samples = positive_int(o.at("samples"), "output.samples");
    if (o.contains("field_time")) c.field_time = positive(o.at("field_time"), "output.field_time");
  }
  return c;
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
}

// Flags override file values by being written into the document before it is
// parsed, so both go through the same validation.
struct Flags {
  std::string config;
  std::optional<double> gamma, rho_minus, rho_plus, v_minus, v_plus;
  bool isothermal = false;
  std::optional<std::string> rho1;
  std::optional<double> eps2;
  std::optional<int> threads;
  std::optional<double> tol, t_max, padding, half_period;
  std::optional<double> width;
  std::optional<int> resolution, levels;
  std::optional<std::string> preset;
  std::optional<int> rho1_count, eps2_count;
  std::optional<double> eps2_max;
  std::optional<std::vector<double>> gammas;
  std::optional<std::string> output, format, curve_output, field_output;
  std::optional<int> samples;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("-c,--config", f.config, "JSON config file");
  cmd->add_option("--gamma", f.gamma, "adiabatic exponent");
  cmd->add_flag("--isothermal", f.isothermal, "allow gamma = 1");
  cmd->add_option("--rho-minus", f.rho_minus);
  cmd->add_option("--rho-plus", f.rho_plus);
  cmd->add_option("--v-minus", f.v_minus);
  cmd->add_option("--v-plus", f.v_plus);
  cmd->add_option("--rho1", f.rho1, "middle density, or 'rho_m'");
  cmd->add_option("--eps2", f.eps2);
  cmd->add_option("-j,--threads", f.threads);
  cmd->add_option("--tol", f.tol, "solver tolerance");
  cmd->add_option("--t-max", f.t_max);
  cmd->add_option("--padding", f.padding);
  cmd->add_option("--L3", f.half_period, "half period in x1");
  cmd->add_option("--width", f.width, "test-function width");
  cmd->add_option("--resolution", f.resolution, "time quadrature panels");
  cmd->add_option("--levels", f.levels, "quadrature refinements");
  cmd->add_option("--preset", f.preset, "grid preset: default | counterexample");
  cmd->add_option("--rho1-count", f.rho1_count);
  cmd->add_option("--eps2-count", f.eps2_count);
  cmd->add_option("--eps2-max", f.eps2_max);
  cmd->add_option("--gammas", f.gammas, "gamma grid")->delimiter(',');
  cmd->add_option("-o,--output", f.output, "output path, '-' for stdout");
  cmd->add_option("--format", f.format, "csv | json");
  cmd->add_option("--curve-out", f.curve_output, "D(t) curve CSV");
  cmd->add_option("--field-out", f.field_output, "field profile CSV");
  cmd->add_option("--samples", f.samples);
}

RunConfig resolve(const Flags& f) {
  json j = load_config(f.config);
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  auto set = [&](const char* section, const char* key, const auto& value) {
    if (value) j[section][key] = *value;
  };
  set("data", "gamma", f.gamma);
  set("data", "rho_minus", f.rho_minus);
  set("data", "rho_plus", f.rho_plus);
  set("data", "v_minus", f.v_minus);
  set("data", "v_plus", f.v_plus);
  if (f.isothermal) j["data"]["allow_isothermal"] = true;
  if (f.rho1) {
    if (*f.rho1 == "rho_m") j["point"]["rho1"] = "rho_m";
    else {
      try {
        std::size_t used = 0;
        const double x = std::stod(*f.rho1, &used);
        if (used != f.rho1->size()) throw std::invalid_argument("trailing characters");
        j["point"]["rho1"] = x;
      } catch (const std::exception&) {
        throw ConfigError("--rho1 must be a number or 'rho_m'");
      }
    }
  }
  set("point", "eps2", f.eps2);
  if (f.threads) j["threads"] = *f.threads;
  set("tolerances", "solver", f.tol);
  set("window", "t_max", f.t_max);
  set("window", "padding", f.padding);
  set("window", "L3", f.half_period);
  set("quadrature", "width", f.width);
  set("quadrature", "resolution", f.resolution);
  set("quadrature", "levels", f.levels);
  set("grid", "preset", f.preset);
  if (f.rho1_count) j["grid"]["rho1_fractions"] = {{"count", *f.rho1_count}};
  if (f.eps2_count || f.eps2_max) {
    json e = {{"count", f.eps2_count.value_or(50)}};
    if (f.eps2_max) e["max"] = *f.eps2_max;
    j["grid"]["eps2"] = e;
  }
  set("grid", "gamma", f.gammas);
  set("output", "path", f.output);
  set("output", "format", f.format);
  set("output", "curve_path", f.curve_output);
  set("output", "field_path", f.field_output);
  set("output", "samples", f.samples);
  return parse_config(j);
}

// ---------------------------------------------------------------------------
// Output

void write_to(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

void make_grid(const RunConfig& c, Grid& g) {
  check(c.grid.preset == "counterexample" ? fanlab_grid_counterexample_default(&g.p)
                                          : fanlab_grid_default(&g.p));
  if (c.grid.rho1_fractions)
    check(fanlab_grid_set_rho1_fractions(g.p, c.grid.rho1_fractions->data(), c.grid.rho1_fractions->size()));
  if (c.grid.eps2) check(fanlab_grid_set_eps2(g.p, c.grid.eps2->data(), c.grid.eps2->size()));
  if (c.grid.gammas) check(fanlab_grid_set_gammas(g.p, c.grid.gammas->data(), c.grid.gammas->size()));
  if (c.grid.cases) check(fanlab_grid_set_cases(g.p, c.grid.cases->data(), c.grid.cases->size()));
  if (c.data.allow_isothermal) check(fanlab_grid_set_allow_isothermal(g.p, 1));
}

double resolve_rho1(const RunConfig& c) {
  if (!c.rho1) throw ConfigError("this command needs point.rho1 (or --rho1)");
  if (*c.rho1 == "rho_m") {
    fanlab_two_shock s;
    check(fanlab_solve_two_shock(&c.data, c.options.tol, &s));
    return s.rho_m;
  }
  return std::stod(*c.rho1);
}

// ---------------------------------------------------------------------------
// Commands

int cmd_solve(const RunConfig& c) {
  int exists = 0;
  double discriminant = 0.0;
  check(fanlab_two_shock_exists(&c.data, &exists, &discriminant));
  if (!exists) {
    std::cerr << "no 2-shock solution: the existence condition "
                 "(v- - v+)^2 rho+ rho- > (rho+ - rho-)(p(rho+) - p(rho-)) with v- > v+ fails "
                 "(discriminant "
              << discriminant << ")\n";
    return kNoTwoShock;
  }
  fanlab_two_shock s;
  check(fanlab_solve_two_shock(&c.data, c.options.tol, &s));
  fanlab_two_shock_check k;
  check(fanlab_check_two_shock(&c.data, &s, &k));
  json j = {{"rho_m", s.rho_m},
            {"v_m", s.v_m},
            {"nu_minus", s.nu_minus},
            {"nu_plus", s.nu_plus},
            {"discriminant", discriminant},
            {"residual_norm", {{"left", k.residual_left}, {"right", k.residual_right}}},
            {"entropy_production", {{"left", k.production_left}, {"right", k.production_right}}}};
  write_to(c.output, j.dump(2) + "\n");
  std::cerr << "rho_m = " << s.rho_m << ", v_m = " << s.v_m << ", max residual "
            << std::max(k.residual_left, k.residual_right) << "\n";
  return kOk;
}

int cmd_subsolution(const RunConfig& c) {
  const double rho1 = resolve_rho1(c);
  fanlab_subsolution s;
  check(fanlab_solve_subsolution(&c.data, rho1, c.eps2, c.options.tol, &s));
  fanlab_subsolution_check k;
  check(fanlab_check_subsolution(&c.data, &s, &k));
  json j = {{"rho1", s.rho1},   {"eps2", s.eps2}, {"nu_minus", s.nu_minus},
            {"nu_plus", s.nu_plus}, {"alpha", s.alpha}, {"beta", s.beta},
            {"u11", s.u11},     {"u12", s.u12},   {"eps1", s.eps1},
            {"C", s.C},         {"effective_pressure", s.effective_pressure},
            {"residual_norm", k.residual_norm},
            {"entropy_production", {{"left", k.production_left}, {"right", k.production_right}}},
            {"admissible", k.admissible != 0}};
  if (c.eps2 > 0.0) {
    double rho_star = 0.0, rho_m = 0.0;
    const fanlab_status st = fanlab_find_rho_star(&c.data, c.eps2, c.rho_star_tol, &rho_star, &rho_m);
    if (st == FANLAB_OK) j["interval"] = {{"rho_star", rho_star}, {"rho_m", rho_m}};
    else if (st == FANLAB_ERR_EMPTY_INTERVAL) j["interval"] = nullptr;
    else check(st);
  }
  write_to(c.output, j.dump(2) + "\n");
  if (!k.admissible) {
    std::cerr << "(rho1, eps2) = (" << rho1 << ", " << c.eps2 << ") is not admissible\n";
    return kInadmissible;
  }
  return kOk;
}

int cmd_compare(const RunConfig& c) {
  const double rho1 = resolve_rho1(c);
  Comparison cmp;
  check(fanlab_compare(&c.data, rho1, c.eps2, &c.options, &cmp.p));
  CString report;
  check(fanlab_comparison_json(cmp.p, &report.p));
  write_to(c.output, report.str());
  if (!c.curve_output.empty()) {
    CString csv;
    check(fanlab_comparison_curve_csv(cmp.p, c.samples, &csv.p));
    write_to(c.curve_output, csv.str());
  }
  if (!c.field_output.empty()) {
    CString csv;
    check(fanlab_comparison_field_csv(cmp.p, c.field_time, c.samples, &csv.p));
    write_to(c.field_output, csv.str());
  }
  double kappa = 0.0, rate_diff = 0.0;
  int admissible = 0;
  check(fanlab_comparison_summary(cmp.p, &kappa, &rate_diff, &admissible));
  std::cerr << "kappa = " << kappa << ", rate difference = " << rate_diff << "\n";
  const json pairs = json::parse(report.str()).at("report").at("pairs");
  for (const char* crit : {"LAAP", "LAAP0", "ARAC", "sARAC", "Dafermos"}) {
    fanlab_verdict shock, wild;
    check(fanlab_comparison_verdict(cmp.p, crit, "2-shock", &shock));
    check(fanlab_comparison_verdict(cmp.p, crit, "wild", &wild));
    const char* names[] = {"rejected", "admissible", "strictly admissible"};
    std::cerr << "  " << crit << ": 2-shock " << names[shock] << ", wild " << names[wild];
    // Witness of the 2-shock-against-wild comparison.
    for (const json& p : pairs)
      if (p.at("criterion") == crit && p.at("u") == "2-shock") {
        if (p.contains("order")) std::cerr << " (k = " << p.at("order").get<int>() << ")";
        if (p.contains("t1")) std::cerr << " (t1 = " << p.at("t1").get<double>() << ")";
        if (p.at("exact_tie").get<bool>()) std::cerr << " (exact tie)";
      }
    std::cerr << "\n";
  }
  if (!admissible) {
    std::cerr << "(rho1, eps2) is not admissible; report emitted for reference\n";
    return kInadmissible;
  }
  return kOk;
}

int cmd_scan(const RunConfig& c) {
  Grid g;
  make_grid(c, g);
  if (!c.grid.gammas) {
    const double gamma[] = {c.data.gamma};
    check(fanlab_grid_set_gammas(g.p, gamma, 1));
  }
  if (!c.grid.cases) check(fanlab_grid_set_cases(g.p, &c.data.states, 1));
  Scan s;
  check(fanlab_scan_run(g.p, &c.options, &s.p));
  CString out;
  check(c.format == "csv" ? fanlab_scan_csv(s.p, &out.p) : fanlab_scan_json(s.p, &out.p));
  write_to(c.output, out.str());
  std::cerr << fanlab_scan_size(s.p) << " records\n";
  return kOk;
}

int cmd_sweep(const RunConfig& c) {
  Grid g;
  make_grid(c, g);
  CString sweep;
  check(fanlab_gamma_sweep(g.p, &c.options, &sweep.p));
  json j = json::parse(sweep.str());
  const std::vector<double> gammas = c.grid.gammas.value_or(std::vector<double>{1.2, 1.4, 5.0 / 3.0, 2.0, 2.5, 3.0});
  for (double gamma : gammas)
    if (gamma == 2.0) {
      const double two[] = {2.0};
      check(fanlab_grid_set_gammas(g.p, two, 1));
      CString sel;
      std::size_t violations = 0;
      check(fanlab_verify_global_selection(g.p, &c.options, &violations, &sel.p));
      j["global_selection"] = json::parse(sel.str());
      std::cerr << "gamma = 2: " << violations << " admissible points with kappa >= 0\n";
    }
  write_to(c.output, j.dump(2) + "\n");
  for (const json& row : j.at("per_gamma"))
    std::cerr << "gamma " << row.at("gamma").get<double>() << ": " << row.at("kappa_negative") << " of "
              << row.at("admissible") << " admissible points have kappa < 0\n";
  return kOk;
}

int cmd_counterexample(const RunConfig& c) {
  RunConfig cc = c;
  if (!c.grid.rho1_fractions && !c.grid.eps2 && !c.grid.gammas && !c.grid.cases)
    cc.grid.preset = c.grid.preset == "default" ? "counterexample" : c.grid.preset;
  Grid g;
  make_grid(cc, g);
  int found = 0;
  CString out;
  check(fanlab_find_counterexample(g.p, &c.options, &found, &out.p));
  json j = json::parse(out.str());
  if (found) {
    const json& w = j.at("witness");
    fanlab_data d = c.data;
    d.gamma = w.at("gamma").get<double>();
    d.states = {w.at("data").at("rho_minus").get<double>(), w.at("data").at("rho_plus").get<double>(),
                w.at("data").at("v_minus").get<double>(), w.at("data").at("v_plus").get<double>()};
    Comparison cmp;
    check(fanlab_compare(&d, w.at("rho1").get<double>(), w.at("eps2").get<double>(), &c.options, &cmp.p));
    CString report;
    check(fanlab_comparison_json(cmp.p, &report.p));
    j["comparison"] = json::parse(report.str());
    std::cerr << "witness at gamma " << d.gamma << ", rho1 " << w.at("rho1").get<double>() << ", eps2 "
              << w.at("eps2").get<double>() << "\n";
  } else {
    std::cerr << "no witness on this grid\n";
  }
  write_to(c.output, j.dump(2) + "\n");
  return kOk;
}

int cmd_verify(const RunConfig& c) {
  const double rho1 = c.rho1 ? resolve_rho1(c) : 0.0;
  int decreasing = 0;
  CString out;
  check(fanlab_verify_fields(&c.data, rho1, c.eps2, c.width, c.resolution, c.levels, c.options.tol,
                             &decreasing, &out.p));
  write_to(c.output, out.str());
  std::cerr << (decreasing ? "weak residuals decrease under refinement\n"
                           : "weak residuals do not decrease monotonically under refinement\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar Riemann problems: 2-shock solutions, fan sub-solutions and selection criteria"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fanlab_version());

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
    Flags flags;
  };
  std::vector<Command> commands = {
      {"solve", "solve the 2-shock Riemann problem", cmd_solve, {}},
      {"subsolution", "solve the fan sub-solution at (rho1, eps2)", cmd_subsolution, {}},
      {"compare", "compare the 2-shock with the wild solutions at (rho1, eps2)", cmd_compare, {}},
      {"scan", "scan (rho1, eps2) for the configured data", cmd_scan, {}},
      {"sweep", "kappa-sign statistics over the gamma grid", cmd_sweep, {}},
      {"counterexample", "search for an entropy-rate counterexample", cmd_counterexample, {}},
      {"verify", "weak-form residuals under quadrature refinement", cmd_verify, {}},
  };
  std::vector<CLI::App*> subs;
  for (Command& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    add_flags(sub, cmd.flags);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadConfig;
  }

  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      return commands[i].run(resolve(commands[i].flags));
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return kBadConfig;
    } catch (const Failure& e) {
      std::cerr << e.what() << "\n";
      return e.code;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kBadConfig;
    }
  }
  return kBadConfig;
}
