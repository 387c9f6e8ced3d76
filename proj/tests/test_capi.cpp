#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>

#include "fanlab/fanlab.h"

using nlohmann::json;

namespace {

const fanlab_data kSym{2.0, 0, {1.0, 1.0, 1.0, -1.0}};

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s ? s : "";
  fanlab_string_free(s);
  return out;
}

struct ComparisonDeleter {
  void operator()(fanlab_comparison* c) const { fanlab_comparison_free(c); }
};
struct GridDeleter {
  void operator()(fanlab_grid* g) const { fanlab_grid_free(g); }
};
struct ScanDeleter {
  void operator()(fanlab_scan* s) const { fanlab_scan_free(s); }
};
using Comparison = std::unique_ptr<fanlab_comparison, ComparisonDeleter>;
using Grid = std::unique_ptr<fanlab_grid, GridDeleter>;
using Scan = std::unique_ptr<fanlab_scan, ScanDeleter>;

Grid small_grid() {
  fanlab_grid* g = nullptr;
  EXPECT_EQ(fanlab_grid_default(&g), FANLAB_OK);
  Grid grid(g);
  const double fractions[] = {0.25, 0.5, 0.75, 0.9, 1.0};
  const double eps2[] = {0.05, 0.5};
  const double gammas[] = {2.0};
  EXPECT_EQ(fanlab_grid_set_rho1_fractions(g, fractions, 5), FANLAB_OK);
  EXPECT_EQ(fanlab_grid_set_eps2(g, eps2, 2), FANLAB_OK);
  EXPECT_EQ(fanlab_grid_set_gammas(g, gammas, 1), FANLAB_OK);
  return grid;
}

}  // namespace

TEST(CApi, Basics) {
  EXPECT_STREQ(fanlab_version(), "0.1.0");
  EXPECT_STREQ(fanlab_status_string(FANLAB_OK), "ok");
  EXPECT_STRNE(fanlab_status_string(FANLAB_ERR_NO_TWO_SHOCK), "");
  const fanlab_scan_options o = fanlab_scan_options_default();
  EXPECT_EQ(o.threads, 1);
  EXPECT_EQ(o.t_max, 1.0);
  EXPECT_EQ(o.tol, 1e-12);
}

TEST(CApi, TwoShock) {
  int exists = 0;
  double disc = 0;
  ASSERT_EQ(fanlab_two_shock_exists(&kSym, &exists, &disc), FANLAB_OK);
  EXPECT_EQ(exists, 1);
  fanlab_two_shock s{};
  ASSERT_EQ(fanlab_solve_two_shock(&kSym, 1e-12, &s), FANLAB_OK);
  EXPECT_NEAR(s.rho_m, 1.8019377358048383, 1e-12);
  EXPECT_NEAR(s.v_m, 0.0, 1e-14);
  EXPECT_NEAR(s.nu_plus, 1.246979603717467, 1e-12);
  fanlab_two_shock_check c{};
  ASSERT_EQ(fanlab_check_two_shock(&kSym, &s, &c), FANLAB_OK);
  EXPECT_LT(c.residual_left, 1e-10);
  EXPECT_LT(c.residual_right, 1e-10);
  EXPECT_GT(c.production_left, 0.0);

  const fanlab_data diverging{2.0, 0, {1.0, 1.0, -1.0, 1.0}};
  EXPECT_EQ(fanlab_solve_two_shock(&diverging, 1e-12, &s), FANLAB_ERR_NO_TWO_SHOCK);
  EXPECT_NE(std::string(fanlab_last_error()), "");
  const fanlab_data negative{2.0, 0, {-1.0, 1.0, 1.0, -1.0}};
  EXPECT_NE(fanlab_solve_two_shock(&negative, 1e-12, &s), FANLAB_OK);
  const fanlab_data iso{1.0, 0, {1.0, 1.0, 1.0, -1.0}};
  EXPECT_NE(fanlab_solve_two_shock(&iso, 1e-12, &s), FANLAB_OK);
  const fanlab_data iso_ok{1.0, 1, {1.0, 1.0, 1.0, -1.0}};
  EXPECT_EQ(fanlab_solve_two_shock(&iso_ok, 1e-12, &s), FANLAB_OK);
  EXPECT_EQ(fanlab_solve_two_shock(nullptr, 1e-12, &s), FANLAB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Subsolution) {
  fanlab_subsolution w{};
  ASSERT_EQ(fanlab_solve_subsolution(&kSym, 1.75, 0.1, 1e-12, &w), FANLAB_OK);
  EXPECT_EQ(w.rho1, 1.75);
  EXPECT_EQ(w.alpha, 0.0);
  fanlab_subsolution_check c{};
  ASSERT_EQ(fanlab_check_subsolution(&kSym, &w, &c), FANLAB_OK);
  EXPECT_LT(c.residual_norm, 1e-10);
  EXPECT_EQ(c.admissible, 1);
  EXPECT_EQ(fanlab_solve_subsolution(&kSym, 0.9, 0.1, 1e-12, &w), FANLAB_ERR_NO_SUBSOLUTION);
  double rho_star = 0, rho_m = 0;
  ASSERT_EQ(fanlab_find_rho_star(&kSym, 0.04, 1e-12, &rho_star, &rho_m), FANLAB_OK);
  EXPECT_NEAR(rho_star, 1.66954211758369, 1e-11);
  EXPECT_EQ(fanlab_find_rho_star(&kSym, 0.5, 1e-12, &rho_star, &rho_m), FANLAB_ERR_EMPTY_INTERVAL);
}

TEST(CApi, Compare) {
  const fanlab_scan_options o = fanlab_scan_options_default();
  fanlab_comparison* raw = nullptr;
  ASSERT_EQ(fanlab_compare(&kSym, 1.75, 0.1, &o, &raw), FANLAB_OK);
  Comparison c(raw);
  double kappa = 0, rate = 0;
  int admissible = 0;
  ASSERT_EQ(fanlab_comparison_summary(c.get(), &kappa, &rate, &admissible), FANLAB_OK);
  EXPECT_EQ(admissible, 1);
  EXPECT_LT(kappa, 0.0);
  fanlab_verdict v{};
  ASSERT_EQ(fanlab_comparison_verdict(c.get(), "sARAC", "2-shock", &v), FANLAB_OK);
  EXPECT_EQ(v, FANLAB_STRICTLY_ADMISSIBLE);
  ASSERT_EQ(fanlab_comparison_verdict(c.get(), "sARAC", "wild", &v), FANLAB_OK);
  EXPECT_EQ(v, FANLAB_REJECTED);
  EXPECT_EQ(fanlab_comparison_verdict(c.get(), "bogus", "wild", &v), FANLAB_ERR_INVALID_ARGUMENT);

  char* text = nullptr;
  ASSERT_EQ(fanlab_comparison_json(c.get(), &text), FANLAB_OK);
  const json j = json::parse(take(text));
  EXPECT_EQ(j.at("curve").size(), 21u);
  EXPECT_EQ(j.at("gap").at("kappa").get<double>(), kappa);

  ASSERT_EQ(fanlab_comparison_curve_csv(c.get(), 11, &text), FANLAB_OK);
  const std::string curve = take(text);
  EXPECT_EQ(curve.rfind("schema_version,t,action_two_shock,action_wild,gap\n", 0), 0u);
  EXPECT_EQ(std::count(curve.begin(), curve.end(), '\n'), 12);
  ASSERT_EQ(fanlab_comparison_field_csv(c.get(), 0.5, 9, &text), FANLAB_OK);
  const std::string field = take(text);
  EXPECT_EQ(field.rfind("schema_version,field,t,x2,rho,v2,E,L\n", 0), 0u);
  EXPECT_EQ(std::count(field.begin(), field.end(), '\n'), 19);

  fanlab_comparison* tie = nullptr;
  ASSERT_EQ(fanlab_compare(&kSym, 1.8019377358048383, 0.0, &o, &tie), FANLAB_OK);
  Comparison t(tie);
  ASSERT_EQ(fanlab_comparison_summary(t.get(), &kappa, &rate, &admissible), FANLAB_OK);
  EXPECT_EQ(kappa, 0.0);
  EXPECT_EQ(admissible, 0);
}

TEST(CApi, ScanDeterministic) {
  Grid g = small_grid();
  fanlab_scan_options o = fanlab_scan_options_default();
  fanlab_scan* a = nullptr;
  ASSERT_EQ(fanlab_scan_run(g.get(), &o, &a), FANLAB_OK);
  Scan sa(a);
  o.threads = 8;
  fanlab_scan* b = nullptr;
  ASSERT_EQ(fanlab_scan_run(g.get(), &o, &b), FANLAB_OK);
  Scan sb(b);
  EXPECT_EQ(fanlab_scan_size(a), 6u * 5u * 2u);
  char* ca = nullptr;
  char* cb = nullptr;
  ASSERT_EQ(fanlab_scan_csv(a, &ca), FANLAB_OK);
  ASSERT_EQ(fanlab_scan_csv(b, &cb), FANLAB_OK);
  EXPECT_EQ(take(ca), take(cb));
  fanlab_scan_record r{};
  ASSERT_EQ(fanlab_scan_record_at(a, 0, &r), FANLAB_OK);
  EXPECT_EQ(r.gamma, 2.0);
  EXPECT_EQ(fanlab_scan_record_at(a, 1000, &r), FANLAB_ERR_INVALID_ARGUMENT);
  char* js = nullptr;
  ASSERT_EQ(fanlab_scan_json(a, &js), FANLAB_OK);
  EXPECT_EQ(json::parse(take(js)).at("records").size(), 60u);
}

TEST(CApi, GridValidation) {
  Grid g = small_grid();
  const double bad[] = {0.5, 0.25};
  EXPECT_EQ(fanlab_grid_set_rho1_fractions(g.get(), bad, 2), FANLAB_ERR_INVALID_ARGUMENT);
  const fanlab_case negative{-1.0, 1.0, 1.0, -1.0};
  EXPECT_EQ(fanlab_grid_set_cases(g.get(), &negative, 1), FANLAB_ERR_INVALID_ARGUMENT);
  char* text = nullptr;
  ASSERT_EQ(fanlab_grid_json(g.get(), &text), FANLAB_OK);
  const json j = json::parse(take(text));
  EXPECT_EQ(j.at("rho1_fractions").size(), 5u);

  // Existence is a property of the whole grid, checked when it is used.
  const fanlab_case diverging{1.0, 1.0, -1.0, 1.0};
  ASSERT_EQ(fanlab_grid_set_cases(g.get(), &diverging, 1), FANLAB_OK);
  const fanlab_scan_options o = fanlab_scan_options_default();
  fanlab_scan* s = nullptr;
  EXPECT_EQ(fanlab_scan_run(g.get(), &o, &s), FANLAB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(s, nullptr);
  const double iso[] = {1.0, 2.0};
  ASSERT_EQ(fanlab_grid_set_gammas(g.get(), iso, 2), FANLAB_OK);
  const fanlab_case sym{1.0, 1.0, 1.0, -1.0};
  ASSERT_EQ(fanlab_grid_set_cases(g.get(), &sym, 1), FANLAB_OK);
  EXPECT_NE(fanlab_scan_run(g.get(), &o, &s), FANLAB_OK);
  ASSERT_EQ(fanlab_grid_set_allow_isothermal(g.get(), 1), FANLAB_OK);
  ASSERT_EQ(fanlab_scan_run(g.get(), &o, &s), FANLAB_OK);
  fanlab_scan_free(s);
}

TEST(CApi, Summaries) {
  Grid g = small_grid();
  const fanlab_scan_options o = fanlab_scan_options_default();
  size_t violations = 99;
  char* text = nullptr;
  ASSERT_EQ(fanlab_verify_global_selection(g.get(), &o, &violations, &text), FANLAB_OK);
  EXPECT_EQ(violations, 0u);
  EXPECT_TRUE(json::parse(take(text)).at("detector_ok").get<bool>());
  ASSERT_EQ(fanlab_gamma_sweep(g.get(), &o, &text), FANLAB_OK);
  EXPECT_EQ(json::parse(take(text)).at("rows").size(), 6u);
  int found = -1;
  ASSERT_EQ(fanlab_find_counterexample(g.get(), &o, &found, &text), FANLAB_OK);
  EXPECT_NO_THROW(json::parse(take(text)));
  int decreasing = 0;
  ASSERT_EQ(fanlab_verify_fields(&kSym, 1.75, 0.1, 0.25, 32, 3, 1e-6, &decreasing, &text),
            FANLAB_OK);
  EXPECT_EQ(decreasing, 1);
  EXPECT_NO_THROW(json::parse(take(text)));
}
