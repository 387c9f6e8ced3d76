#include "fanlab/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fanlab/error.hpp"

namespace fanlab {

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::Laap: return "LAAP";
    case Criterion::Laap0: return "LAAP0";
    case Criterion::Arac: return "ARAC";
    case Criterion::Sarac: return "sARAC";
    case Criterion::Dafermos: return "Dafermos";
  }
  return "?";
}

std::optional<Criterion> criterion_from_string(std::string_view name) {
  for (Criterion c : {Criterion::Laap, Criterion::Laap0, Criterion::Arac, Criterion::Sarac,
                      Criterion::Dafermos})
    if (name == to_string(c)) return c;
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Rejected: return "rejected";
    case Verdict::Admissible: return "admissible";
    case Verdict::StrictlyAdmissible: return "strictly-admissible";
  }
  return "?";
}

std::optional<Verdict> verdict_from_string(std::string_view name) {
  for (Verdict v : {Verdict::Rejected, Verdict::Admissible, Verdict::StrictlyAdmissible})
    if (name == to_string(v)) return v;
  return std::nullopt;
}

Verdict AdmissibilityReport::verdict(Criterion c, std::string_view label) const {
  const auto it = verdicts.find(c);
  if (it == verdicts.end())
    throw Error(ErrorKind::InvalidArgument, std::string("report has no ") + to_string(c) + " verdicts");
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return it->second[i];
  throw Error(ErrorKind::InvalidArgument, "unknown candidate label " + std::string(label));
}

const PairRecord* AdmissibilityReport::pair(Criterion c, std::string_view u,
                                            std::string_view v) const {
  for (const PairRecord& p : pairs)
    if (p.criterion == c && p.u == u && p.v == v) return &p;
  return nullptr;
}

void AdmissibilityReport::merge(const AdmissibilityReport& other) {
  if (labels.empty()) labels = other.labels;
  if (labels != other.labels)
    throw Error(ErrorKind::InvalidArgument, "cannot merge reports over different candidates");
  for (const auto& [c, v] : other.verdicts) verdicts[c] = v;
  pairs.insert(pairs.end(), other.pairs.begin(), other.pairs.end());
  if (other.laap_time) laap_time = other.laap_time;
}

namespace {

void validate(const CandidateSet& set) {
  if (set.candidates.empty())
    throw Error(ErrorKind::InvalidArgument, "candidate set is empty");
  if (set.reference >= set.candidates.size())
    throw Error(ErrorKind::InvalidArgument, "reference index out of range");
  for (std::size_t i = 0; i < set.candidates.size(); ++i) {
    const Candidate& c = set.candidates[i];
    if (c.action.ladder[0] != 0.0)
      throw Error(ErrorKind::InvalidArgument, "actions must vanish at the initial time: " + c.label);
    for (std::size_t j = 0; j < i; ++j)
      if (set.candidates[j].label == c.label)
        throw Error(ErrorKind::InvalidArgument, "duplicate candidate label " + c.label);
  }
}

AdmissibilityReport blank_report(const CandidateSet& set) {
  AdmissibilityReport r;
  for (const Candidate& c : set.candidates) r.labels.push_back(c.label);
  return r;
}

// Builds verdicts from the pair table: admissible iff preferred to every
// other candidate, strictly iff strictly preferred to every other one.
void fill_verdicts(AdmissibilityReport& report, Criterion c, std::size_t n) {
  std::vector<Verdict> out(n, Verdict::StrictlyAdmissible);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool all_preferred = true;
    bool all_strict = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const PairRecord& p = report.pairs[idx++];
      all_preferred = all_preferred && p.preferred;
      all_strict = all_strict && p.strict;
    }
    out[i] = all_strict ? Verdict::StrictlyAdmissible
                        : (all_preferred ? Verdict::Admissible : Verdict::Rejected);
  }
  report.verdicts[c] = std::move(out);
}

template <class Compare>
AdmissibilityReport pairwise(const CandidateSet& set, Criterion c, Compare compare) {
  validate(set);
  AdmissibilityReport report = blank_report(set);
  const auto& cs = set.candidates;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      PairRecord p;
      p.criterion = c;
      p.u = cs[i].label;
      p.v = cs[j].label;
      compare(cs[i], cs[j], p);
      report.pairs.push_back(std::move(p));
    }
  fill_verdicts(report, c, cs.size());
  return report;
}

// Smallest t in (0, horizon] where c1 t + c2 t^2 / 2 changes sign from
// nonnegative to negative; horizon if none.
double first_negative_crossing(double c1, double c2, double horizon) {
  if (c2 == 0.0 || c1 == 0.0) return horizon;
  const double root = -2.0 * c1 / c2;
  if (root > 0.0 && c1 > 0.0 && root < horizon) return root;
  return horizon;
}

}  // namespace

AdmissibilityReport laap_verdict(const CandidateSet& set, double t1) {
  validate(set);
  if (!(t1 > 0.0)) throw Error(ErrorKind::InvalidArgument, "LAAP needs t1 > 0");
  for (const Candidate& c : set.candidates)
    if (t1 > c.valid_until) {
      std::ostringstream msg;
      msg << "LAAP at t1 = " << t1 << " exceeds the validity horizon " << c.valid_until
          << " of " << c.label;
      throw Error(ErrorKind::WindowTooSmall, msg.str());
    }
  AdmissibilityReport r = pairwise(set, Criterion::Laap,
                                   [t1](const Candidate& u, const Candidate& v, PairRecord& p) {
                                     p.u_value = u.action(t1);
                                     p.v_value = v.action(t1);
                                     p.preferred = p.u_value <= p.v_value;
                                     p.strict = p.u_value < p.v_value;
                                     p.exact_tie = u.action == v.action;
                                   });
  r.laap_time = t1;
  return r;
}

AdmissibilityReport laap0_verdict(const CandidateSet& set, Laap0Method method, int grid_points) {
  if (method == Laap0Method::TimeGrid && grid_points < 2)
    throw Error(ErrorKind::InvalidArgument, "time grid needs at least two points");
  return pairwise(set, Criterion::Laap0, [&](const Candidate& u, const Candidate& v,
                                             PairRecord& p) {
    const double horizon = std::min(u.valid_until, v.valid_until);
    const double h = std::isfinite(horizon) ? horizon : 1.0;
    p.exact_tie = u.action.exact && v.action.exact && u.action == v.action;
    if (method == Laap0Method::Exact) {
      if (!u.action.exact || !v.action.exact)
        throw Error(ErrorKind::InvalidArgument, "exact LAAP0 comparison needs exact action curves");
      // Gap g = A(v) - A(u); its first nonzero Taylor coefficient decides.
      const double c1 = v.action.ladder[1] - u.action.ladder[1];
      const double c2 = v.action.ladder[2] - u.action.ladder[2];
      const double lead = (c1 != 0.0) ? c1 : c2;
      p.u_value = u.action(h);
      p.v_value = v.action(h);
      p.preferred = lead >= 0.0;
      p.strict = lead > 0.0;
      if (p.preferred) p.t1 = first_negative_crossing(c1, c2, h);
      return;
    }
    // Grid t_k = h (k / n)^2, k = 1..n.
    bool any_positive = false;
    std::optional<double> first_bad;
    for (int k = 1; k <= grid_points; ++k) {
      const double x = static_cast<double>(k) / grid_points;
      const double t = h * x * x;
      const double g = v.action(t) - u.action(t);
      if (g < 0.0) {
        first_bad = t;
        break;
      }
      if (g > 0.0) any_positive = true;
    }
    const double t_first = h / (static_cast<double>(grid_points) * grid_points);
    p.u_value = u.action(h);
    p.v_value = v.action(h);
    p.preferred = !(first_bad && *first_bad == t_first);
    p.strict = p.preferred && any_positive;
    if (p.preferred) p.t1 = first_bad.value_or(h);
  });
}

AdmissibilityReport arac_verdict(const CandidateSet& set) {
  return pairwise(set, Criterion::Arac, [](const Candidate& u, const Candidate& v, PairRecord& p) {
    p.u_value = u.action.ladder[1];
    p.v_value = v.action.ladder[1];
    p.preferred = p.u_value <= p.v_value;
    p.strict = p.u_value < p.v_value;
    p.exact_tie = u.action == v.action;
  });
}

AdmissibilityReport sarac_verdict(const CandidateSet& set) {
  return pairwise(set, Criterion::Sarac, [](const Candidate& u, const Candidate& v, PairRecord& p) {
    for (int k = 0; k < 3; ++k) {
      const double a = u.action.ladder[k];
      const double b = v.action.ladder[k];
      if (a != b) {
        p.order = k;
        p.u_value = a;
        p.v_value = b;
        p.preferred = p.strict = a < b;
        return;
      }
    }
    if (!u.action.exact || !v.action.exact)
      throw Error(ErrorKind::TieUnresolved,
                  "derivative ladders of " + u.label + " and " + v.label +
                      " agree at every available order");
    p.exact_tie = true;
    p.u_value = u.action.ladder[2];
    p.v_value = v.action.ladder[2];
  });
}

AdmissibilityReport dafermos_verdict(const CandidateSet& set) {
  return pairwise(set, Criterion::Dafermos,
                  [](const Candidate& u, const Candidate& v, PairRecord& p) {
                    p.u_value = u.energy_rate;
                    p.v_value = v.energy_rate;
                    p.preferred = p.u_value <= p.v_value;
                    p.strict = p.u_value < p.v_value;
                    p.exact_tie = p.u_value == p.v_value;
                  });
}

AdmissibilityReport evaluate_all(const CandidateSet& set, std::optional<double> laap_time) {
  validate(set);
  double horizon = std::numeric_limits<double>::infinity();
  for (const Candidate& c : set.candidates) horizon = std::min(horizon, c.valid_until);
  const double t1 = laap_time.value_or(std::isfinite(horizon) ? horizon : 1.0);
  AdmissibilityReport report = laap_verdict(set, t1);
  report.merge(laap0_verdict(set));
  report.merge(arac_verdict(set));
  report.merge(sarac_verdict(set));
  report.merge(dafermos_verdict(set));
  return report;
}

std::vector<std::string> implication_chain_violations(const AdmissibilityReport& report) {
  std::vector<std::string> out;
  const bool sarac = report.has(Criterion::Sarac);
  const bool laap0 = report.has(Criterion::Laap0);
  const bool arac = report.has(Criterion::Arac);
  for (const std::string& label : report.labels) {
    if (sarac && laap0 && report.verdict(Criterion::Sarac, label) == Verdict::StrictlyAdmissible &&
        report.verdict(Criterion::Laap0, label) != Verdict::StrictlyAdmissible)
      out.push_back(label + ": sARAC-admissible but not strictly LAAP0-admissible");
    if (laap0 && arac && accepts(report.verdict(Criterion::Laap0, label)) &&
        !accepts(report.verdict(Criterion::Arac, label)))
      out.push_back(label + ": LAAP0-admissible but not ARAC-admissible");
  }
  return out;
}

Candidate make_candidate(std::string label, const SelfSimilarFanField& field,
                         const ComparisonWindow& window) {
  const ActionPolynomial a = action_polynomial(field, window);
  Candidate c;
  c.label = std::move(label);
  c.action.ladder = {0.0, a.linear, a.quadratic};
  c.action.exact = true;
  c.energy_rate = dissipation_rate(field, window).interior;
  c.valid_until = window.t_max;
  return c;
}

std::string wild_label(double rho1, double eps2) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "wild(rho1=%.10g,eps2=%.10g)", rho1, eps2);
  return buf;
}

CandidateSet make_candidate_set(const RiemannData& data, const TwoShockSolution& shock,
                                const std::vector<FanSubsolution>& subs,
                                const ComparisonWindow& window) {
  CandidateSet set;
  set.candidates.push_back(make_candidate(kTwoShockLabel, two_shock_field(data, shock), window));
  for (const FanSubsolution& s : subs)
    set.candidates.push_back(
        make_candidate(wild_label(s.rho1, s.eps2), wild_effective_field(data, s), window));
  set.reference = 0;
  return set;
}

}  // namespace fanlab
