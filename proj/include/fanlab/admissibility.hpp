#pragma once

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanlab/action.hpp"

namespace fanlab {

enum class Criterion { Laap, Laap0, Arac, Sarac, Dafermos };

const char* to_string(Criterion c);
std::optional<Criterion> criterion_from_string(std::string_view name);

enum class Verdict { Rejected, Admissible, StrictlyAdmissible };

const char* to_string(Verdict v);
std::optional<Verdict> verdict_from_string(std::string_view name);

inline bool accepts(Verdict v) { return v != Verdict::Rejected; }

/// Right-derivatives of t -> A(0, t) at 0+: ladder = (A, A', A'').
/// `exact` marks curves that equal their quadratic Taylor polynomial, which
/// holds for every self-similar field.
struct ActionCurve {
  std::array<double, 3> ladder{};
  bool exact = true;

  double operator()(double t) const { return ladder[0] + ladder[1] * t + 0.5 * ladder[2] * t * t; }

  friend bool operator==(const ActionCurve&, const ActionCurve&) = default;
};

struct Candidate {
  std::string label;
  ActionCurve action;
  double energy_rate = 0.0;  ///< dE/dt at 0+, net of boundary flux
  /// Horizon of the candidate's validity; global comparisons past it are refused.
  double valid_until = std::numeric_limits<double>::infinity();
};

/// Candidates compared under the same data and window. `reference` only
/// selects which candidate gaps are reported against.
struct CandidateSet {
  std::vector<Candidate> candidates;
  std::size_t reference = 0;
};

/// One ordered comparison "u against v" under one criterion.
struct PairRecord {
  Criterion criterion = Criterion::Laap;
  std::string u;
  std::string v;
  bool preferred = false;  ///< u is (weakly) preferred to v
  bool strict = false;     ///< u is strictly preferred to v
  bool exact_tie = false;  ///< the compared curves coincide identically
  std::optional<double> t1;  ///< LAAP0 witness time
  std::optional<int> order;  ///< sARAC separating derivative order k
  double u_value = 0.0;      ///< compared quantity for u (action, rate, ...)
  double v_value = 0.0;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

struct AdmissibilityReport {
  std::vector<std::string> labels;
  std::map<Criterion, std::vector<Verdict>> verdicts;  ///< indexed like labels
  std::vector<PairRecord> pairs;
  std::optional<double> laap_time;

  /// Throws InvalidArgument for unknown labels or criteria absent from the report.
  Verdict verdict(Criterion c, std::string_view label) const;
  bool has(Criterion c) const { return verdicts.count(c) != 0; }
  const PairRecord* pair(Criterion c, std::string_view u, std::string_view v) const;

  /// Adds the criteria of `other`, which must cover the same labels.
  void merge(const AdmissibilityReport& other);

  friend bool operator==(const AdmissibilityReport&, const AdmissibilityReport&) = default;
};

/// Fixed final time: u is admissible iff A(u)(t1) <= A(v)(t1) for all v.
AdmissibilityReport laap_verdict(const CandidateSet& set, double t1);

enum class Laap0Method {
  Exact,    ///< first nonzero Taylor coefficient of the gap (exact curves only)
  TimeGrid  ///< sign scan of the gap on a grid refined towards t = 0
};

/// u is preferred to v iff A(u) <= A(v) on some (0, t1(v)); strictly if the
/// inequality is strict somewhere there. Records a witness t1 per pair.
AdmissibilityReport laap0_verdict(const CandidateSet& set, Laap0Method method = Laap0Method::Exact,
                                  int grid_points = 400);

/// First action derivative at 0+ is minimal.
AdmissibilityReport arac_verdict(const CandidateSet& set);

/// Lexicographic comparison of the derivative ladders; records k per pair.
/// Identical exact curves are an exact tie (never strict); identical ladders
/// of inexact curves throw TieUnresolved.
AdmissibilityReport sarac_verdict(const CandidateSet& set);

/// Maximal dissipation: dE/dt at 0+ is minimal.
AdmissibilityReport dafermos_verdict(const CandidateSet& set);

/// All five criteria; LAAP is evaluated at `laap_time` or, if absent, at the
/// common validity horizon.
AdmissibilityReport evaluate_all(const CandidateSet& set,
                                 std::optional<double> laap_time = std::nullopt);

/// Checks sARAC => strict LAAP0 => LAAP0 => ARAC candidate by candidate and
/// returns a description of every violation (empty when the chain holds).
std::vector<std::string> implication_chain_violations(const AdmissibilityReport& report);

Candidate make_candidate(std::string label, const SelfSimilarFanField& field,
                         const ComparisonWindow& window);

std::string wild_label(double rho1, double eps2);

inline constexpr const char* kTwoShockLabel = "2-shock";

/// {2-shock, wild(sub) for each sub}; the 2-shock is the reference. The
/// window must contain every field up to its t_max.
CandidateSet make_candidate_set(const RiemannData& data, const TwoShockSolution& shock,
                                const std::vector<FanSubsolution>& subs,
                                const ComparisonWindow& window);

}  // namespace fanlab
