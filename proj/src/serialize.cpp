#include "fanlab/serialize.hpp"

#include <cmath>
#include <limits>

#include "fanlab/error.hpp"

namespace fanlab {

json number_to_json(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw Error(ErrorKind::InvalidArgument, "not a number: " + s);
  }
  return j.get<double>();
}

namespace {

void put(json& j, const char* key, double x) { j[key] = number_to_json(x); }
double get(const json& j, const char* key) { return number_from_json(j.at(key)); }

void put_opt(json& j, const char* key, const std::optional<double>& x) {
  if (x) j[key] = number_to_json(*x);
}
std::optional<double> get_opt(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return number_from_json(j.at(key));
}

template <class Enum, class Parse>
Enum parse_enum(const json& j, Parse parse, const char* what) {
  const auto value = parse(j.get<std::string>());
  if (!value) throw Error(ErrorKind::InvalidArgument, std::string("unknown ") + what);
  return *value;
}

std::optional<PointStatus> status_from_string(std::string_view s) {
  for (PointStatus p : {PointStatus::Ok, PointStatus::NoSubsolution, PointStatus::NoConvergence})
    if (s == to_string(p)) return p;
  return std::nullopt;
}

}  // namespace

void to_json(json& j, const DataCase& c) {
  j = json::object();
  put(j, "rho_minus", c.rho_minus);
  put(j, "rho_plus", c.rho_plus);
  put(j, "v_minus", c.v_minus);
  put(j, "v_plus", c.v_plus);
}

void from_json(const json& j, DataCase& c) {
  c.rho_minus = get(j, "rho_minus");
  c.rho_plus = get(j, "rho_plus");
  c.v_minus = get(j, "v_minus");
  c.v_plus = get(j, "v_plus");
}

void to_json(json& j, const TwoShockSolution& s) {
  j = json::object();
  put(j, "rho_m", s.rho_m);
  put(j, "v_m", s.v_m);
  put(j, "nu_minus", s.nu_minus);
  put(j, "nu_plus", s.nu_plus);
}

void from_json(const json& j, TwoShockSolution& s) {
  s.rho_m = get(j, "rho_m");
  s.v_m = get(j, "v_m");
  s.nu_minus = get(j, "nu_minus");
  s.nu_plus = get(j, "nu_plus");
}

void to_json(json& j, const FanSubsolution& s) {
  j = json::object();
  put(j, "rho1", s.rho1);
  put(j, "eps2", s.eps2);
  put(j, "nu_minus", s.nu_minus);
  put(j, "nu_plus", s.nu_plus);
  put(j, "alpha", s.alpha);
  put(j, "beta", s.beta);
  put(j, "u11", s.u11);
  put(j, "u12", s.u12);
  put(j, "eps1", s.eps1);
  put(j, "C", s.C);
  put(j, "effective_pressure", s.effective_pressure);
}

void from_json(const json& j, FanSubsolution& s) {
  s.rho1 = get(j, "rho1");
  s.eps2 = get(j, "eps2");
  s.nu_minus = get(j, "nu_minus");
  s.nu_plus = get(j, "nu_plus");
  s.alpha = get(j, "alpha");
  s.beta = get(j, "beta");
  s.u11 = get(j, "u11");
  s.u12 = get(j, "u12");
  s.eps1 = get(j, "eps1");
  s.C = get(j, "C");
  s.effective_pressure = get(j, "effective_pressure");
}

void to_json(json& j, const SubWedge& w) {
  j = json::object();
  put(j, "speed_lo", w.speed_lo);
  put(j, "speed_hi", w.speed_hi);
  put(j, "lagrangian_reference", w.lagrangian_reference);
  put(j, "lagrangian_other", w.lagrangian_other);
  put(j, "contribution", w.contribution);
}

void from_json(const json& j, SubWedge& w) {
  w.speed_lo = get(j, "speed_lo");
  w.speed_hi = get(j, "speed_hi");
  w.lagrangian_reference = get(j, "lagrangian_reference");
  w.lagrangian_other = get(j, "lagrangian_other");
  w.contribution = get(j, "contribution");
}

void to_json(json& j, const ActionGap& g) {
  j = json::object();
  put(j, "rate", g.rate);
  put(j, "kappa", g.kappa);
  put(j, "outer_correction", g.outer_correction);
  j["wedges"] = g.wedges;
}

void from_json(const json& j, ActionGap& g) {
  g.rate = get(j, "rate");
  g.kappa = get(j, "kappa");
  g.outer_correction = get(j, "outer_correction");
  g.wedges = j.at("wedges").get<std::vector<SubWedge>>();
}

void to_json(json& j, const PairRecord& p) {
  j = json::object();
  j["criterion"] = to_string(p.criterion);
  j["u"] = p.u;
  j["v"] = p.v;
  j["preferred"] = p.preferred;
  j["strict"] = p.strict;
  j["exact_tie"] = p.exact_tie;
  put_opt(j, "t1", p.t1);
  if (p.order) j["order"] = *p.order;
  put(j, "u_value", p.u_value);
  put(j, "v_value", p.v_value);
}

void from_json(const json& j, PairRecord& p) {
  p.criterion = parse_enum<Criterion>(j.at("criterion"), criterion_from_string, "criterion");
  p.u = j.at("u").get<std::string>();
  p.v = j.at("v").get<std::string>();
  p.preferred = j.at("preferred").get<bool>();
  p.strict = j.at("strict").get<bool>();
  p.exact_tie = j.at("exact_tie").get<bool>();
  p.t1 = get_opt(j, "t1");
  p.order = j.contains("order") ? std::optional<int>(j.at("order").get<int>()) : std::nullopt;
  p.u_value = get(j, "u_value");
  p.v_value = get(j, "v_value");
}

void to_json(json& j, const AdmissibilityReport& r) {
  j = json::object();
  j["labels"] = r.labels;
  json verdicts = json::object();
  for (const auto& [criterion, list] : r.verdicts) {
    json names = json::array();
    for (Verdict v : list) names.push_back(to_string(v));
    verdicts[to_string(criterion)] = names;
  }
  j["verdicts"] = verdicts;
  j["pairs"] = r.pairs;
  put_opt(j, "laap_time", r.laap_time);
}

void from_json(const json& j, AdmissibilityReport& r) {
  r.labels = j.at("labels").get<std::vector<std::string>>();
  r.verdicts.clear();
  for (const auto& [name, list] : j.at("verdicts").items()) {
    const auto c = criterion_from_string(name);
    if (!c) throw Error(ErrorKind::InvalidArgument, "unknown criterion " + name);
    std::vector<Verdict> vs;
    for (const json& v : list) vs.push_back(parse_enum<Verdict>(v, verdict_from_string, "verdict"));
    if (vs.size() != r.labels.size())
      throw Error(ErrorKind::InvalidArgument, "verdict list does not match labels");
    r.verdicts[*c] = std::move(vs);
  }
  r.pairs = j.at("pairs").get<std::vector<PairRecord>>();
  r.laap_time = get_opt(j, "laap_time");
}

void to_json(json& j, const ScanRecord& r) {
  j = json::object();
  put(j, "gamma", r.gamma);
  j["data"] = r.data;
  put(j, "rho_m", r.rho_m);
  put(j, "rho1", r.rho1);
  put(j, "eps2", r.eps2);
  j["status"] = to_string(r.status);
  j["admissible"] = r.admissible;
  put(j, "nu_minus", r.nu_minus);
  put(j, "nu_plus", r.nu_plus);
  put(j, "beta", r.beta);
  put(j, "eps1", r.eps1);
  put(j, "kappa", r.kappa);
  put(j, "rate_diff", r.rate_diff);
  j["sarac_two_shock"] = r.sarac_two_shock;
  j["laap0_two_shock"] = r.laap0_two_shock;
  j["arac_two_shock"] = r.arac_two_shock;
  j["dafermos_two_shock"] = r.dafermos_two_shock;
}

void from_json(const json& j, ScanRecord& r) {
  r.gamma = get(j, "gamma");
  r.data = j.at("data").get<DataCase>();
  r.rho_m = get(j, "rho_m");
  r.rho1 = get(j, "rho1");
  r.eps2 = get(j, "eps2");
  r.status = parse_enum<PointStatus>(j.at("status"), status_from_string, "status");
  r.admissible = j.at("admissible").get<bool>();
  r.nu_minus = get(j, "nu_minus");
  r.nu_plus = get(j, "nu_plus");
  r.beta = get(j, "beta");
  r.eps1 = get(j, "eps1");
  r.kappa = get(j, "kappa");
  r.rate_diff = get(j, "rate_diff");
  r.sarac_two_shock = j.at("sarac_two_shock").get<bool>();
  r.laap0_two_shock = j.at("laap0_two_shock").get<bool>();
  r.arac_two_shock = j.at("arac_two_shock").get<bool>();
  r.dafermos_two_shock = j.at("dafermos_two_shock").get<bool>();
}

void to_json(json& j, const KappaCheck& k) {
  j = json::object();
  j["points"] = k.points;
  j["admissible"] = k.admissible;
  j["violation_count"] = k.violations.size();
  j["violations"] = k.violations;
  j["detector_ok"] = k.detector_ok;
}

void from_json(const json& j, KappaCheck& k) {
  k.points = j.at("points").get<std::size_t>();
  k.admissible = j.at("admissible").get<std::size_t>();
  k.violations = j.at("violations").get<std::vector<ScanRecord>>();
  k.detector_ok = j.at("detector_ok").get<bool>();
}

void to_json(json& j, const SweepRow& r) {
  j = json::object();
  put(j, "gamma", r.gamma);
  j["data"] = r.data;
  put(j, "rho_m", r.rho_m);
  j["points"] = r.points;
  j["admissible"] = r.admissible;
  j["kappa_negative"] = r.kappa_negative;
  put(j, "fraction_negative", r.fraction_negative);
  put(j, "kappa_min", r.kappa_min);
  put(j, "kappa_max", r.kappa_max);
  put_opt(j, "rho_star", r.rho_star);
  put(j, "rho_star_eps2", r.rho_star_eps2);
  put_opt(j, "kappa_negative_from", r.kappa_negative_from);
}

void from_json(const json& j, SweepRow& r) {
  r.gamma = get(j, "gamma");
  r.data = j.at("data").get<DataCase>();
  r.rho_m = get(j, "rho_m");
  r.points = j.at("points").get<std::size_t>();
  r.admissible = j.at("admissible").get<std::size_t>();
  r.kappa_negative = j.at("kappa_negative").get<std::size_t>();
  r.fraction_negative = get(j, "fraction_negative");
  r.kappa_min = get(j, "kappa_min");
  r.kappa_max = get(j, "kappa_max");
  r.rho_star = get_opt(j, "rho_star");
  r.rho_star_eps2 = get(j, "rho_star_eps2");
  r.kappa_negative_from = get_opt(j, "kappa_negative_from");
}

void to_json(json& j, const CounterexampleWitness& w) {
  j = json::object();
  put(j, "gamma", w.gamma);
  j["data"] = w.data;
  put(j, "rho1", w.rho1);
  put(j, "eps2", w.eps2);
  put(j, "kappa", w.kappa);
  put(j, "rate_diff", w.rate_diff);
  j["refined"] = w.refined;
}

void from_json(const json& j, CounterexampleWitness& w) {
  w.gamma = get(j, "gamma");
  w.data = j.at("data").get<DataCase>();
  w.rho1 = get(j, "rho1");
  w.eps2 = get(j, "eps2");
  w.kappa = get(j, "kappa");
  w.rate_diff = get(j, "rate_diff");
  w.refined = j.at("refined").get<bool>();
}

}  // namespace fanlab
