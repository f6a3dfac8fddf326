#include "doctest.h"
#include "json.hpp"
#include "knotpoly/harness.hpp"
#include "knotpoly/homfly.hpp"

using namespace knotpoly;

namespace {

ExperimentConfig small_config(const char* base) {
  ExperimentConfig cfg;
  cfg.base = BraidWord::parse(base);
  cfg.N = 0;
  cfg.w = 1;
  cfg.family_size = 2;
  return cfg;
}

}  // namespace

TEST_CASE("config defaults") {
  const ExperimentConfig cfg = small_config("3: 1 2");
  CHECK(cfg.soundness_bound() == 6);
  CHECK(cfg.depth() == 6);
  CHECK(cfg.gamma_spec().degree() == 6);
  REQUIRE(cfg.effective_patterns().size() == 1);
  CHECK(cfg.effective_patterns()[0].winding() == 1);
  ExperimentConfig two = cfg;
  two.w = 2;
  CHECK(two.effective_patterns().size() == 2);
  CHECK(two.effective_patterns()[1].word() == BraidWord::parse("2: 1"));
}

TEST_CASE("validation") {
  ExperimentConfig cfg = small_config("3: 1 2");
  cfg.n = 4;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.unsound = true;
  CHECK_NOTHROW(cfg.validate());
  ExperimentConfig link = small_config("3: 1 1 2");
  CHECK_THROWS_AS(link.validate(), Error);
  ExperimentConfig wide = small_config("3: 1 2");
  wide.gamma = CommutatorSpec::parse("[A(1,2),A(3,4)]");
  CHECK_THROWS_AS(wide.validate(), Error);
  ExperimentConfig shallow = small_config("3: 1 2");
  shallow.gamma = CommutatorSpec::parse("[A(1,2),A(2,3)]");
  CHECK(shallow.depth() == 2);
  CHECK_THROWS_AS(shallow.validate(), Error);
  shallow.unsound = true;
  CHECK_NOTHROW(shallow.validate());
  shallow.n = 3;
  CHECK_THROWS_AS(shallow.validate(), Error);
  ExperimentConfig wind = small_config("3: 1 2");
  wind.patterns = {cable_pattern(3, 1)};
  CHECK_THROWS_AS(wind.validate(), Error);
}

TEST_CASE("family construction") {
  ExperimentConfig cfg = small_config("3: 1 2");
  const auto family = build_family(cfg);
  REQUIRE(family.size() == 3);
  const BraidWord gamma = realize_commutator(cfg.gamma_spec(), 3);
  CHECK(family[1] == compose(cfg.base, gamma));
  CHECK(family[2] == compose(family[1], gamma));
  for (const auto& b : family) CHECK(is_knot(b));
  cfg.family_size = 0;
  CHECK(build_family(cfg).size() == 1);
  // Pure braid generators on two strands commute, so this collapses.
  ExperimentConfig flat = small_config("3: 1 2");
  flat.gamma = CommutatorSpec::parse("[A(1,2),A(1,2)]");
  CHECK_THROWS_AS(build_family(flat), Error);
}

TEST_CASE("resource limits") {
  ExperimentConfig cfg = small_config("3: 1 2");
  cfg.w = 3;
  CHECK_THROWS_AS(check_resources(cfg), BudgetExceeded);
  ExperimentConfig tight = small_config("3: 1 2");
  tight.hecke_budget = 10;
  CHECK_THROWS_AS(check_resources(tight), BudgetExceeded);
  CHECK_THROWS_AS(verify_cable_coefficients(tight), BudgetExceeded);
  CHECK_NOTHROW(check_resources(small_config("3: 1 2")));
}

TEST_CASE("small sound run passes") {
  const ExperimentReport r = verify_cable_coefficients(small_config("3: 1 2"));
  CHECK(r.verdict() == Verdict::kPass);
  CHECK_FALSE(r.negative_control);
  CHECK(r.kind == "cable-coefficients");
  CHECK(r.members.size() == 3);
  CHECK(r.slices.size() == 2);
  for (const auto& s : r.slices) CHECK(s.equal);
  // j = 0..2, count n - 2j = 6, 4, 2, for two members.
  CHECK(r.moments.size() == 2 * (6 + 4 + 2));
  for (const auto& c : r.checks) CHECK_MESSAGE(c.violations == 0, c.name);
  CHECK(r.all_distinct());
}

TEST_CASE("negative control records without asserting") {
  ExperimentConfig cfg = small_config("3: 1 1 1 2");
  cfg.n = 3;
  cfg.unsound = true;
  const ExperimentReport r = verify_cable_coefficients(cfg);
  CHECK(r.negative_control);
  for (const auto& s : r.slices) CHECK_FALSE(s.asserted);
  for (const auto& m : r.moments) CHECK_FALSE(m.asserted);
  CHECK(r.verdict() == Verdict::kPass);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("trivial cables of the unknot family") {
  const ExperimentReport r = verify_trivial_cables(1, 1, 1);
  CHECK(r.kind == "trivial-cables");
  CHECK(r.verdict() == Verdict::kPass);
  bool saw_expected = false;
  for (const auto& c : r.checks)
    if (c.name == "expected-cable-slices") {
      saw_expected = true;
      CHECK(c.checked == 4);
    }
  CHECK(saw_expected);
  CHECK_THROWS_AS(verify_trivial_cables(0, 0, 1), Error);
}

TEST_CASE("moment determination") {
  const BraidWord trefoil = BraidWord::parse("2: 1 1 1");
  const ExperimentReport same = verify_moment_determination(BraidWord::parse("3: 1 1 1 2"), BraidWord::parse("3: 2 1 1 1"));
  CHECK(same.verdict() == Verdict::kPass);
  for (const auto& c : same.implications) {
    CHECK(c.moments_equal);
    CHECK(c.slices_equal);
  }
  const ExperimentReport diff = verify_moment_determination(trefoil, BraidWord::parse("3: 1 -2 1 -2"));
  CHECK(diff.verdict() == Verdict::kPass);
  CHECK(diff.all_distinct());
  bool some_unequal = false;
  for (const auto& c : diff.implications) some_unequal = some_unequal || !c.moments_equal;
  CHECK(some_unequal);
  const ExperimentReport unknots = verify_moment_determination(BraidWord(1), BraidWord::parse("3: 1 -2"));
  CHECK(unknots.verdict() == Verdict::kPass);
  CHECK_THROWS_AS(verify_moment_determination(BraidWord::parse("2: 1 1"), trefoil), Error);
}

TEST_CASE("rendering") {
  ExperimentConfig cfg = small_config("3: 1 2");
  const ExperimentReport r = verify_cable_coefficients(cfg);
  const std::string json = render_report(r, ReportFormat::kJson, false);
  const auto j = nlohmann::json::parse(json);
  CHECK(j.at("verdict") == "PASS");
  CHECK(j.at("kind") == "cable-coefficients");
  CHECK(j.at("parameters").at("n") == 6);
  CHECK_FALSE(j.contains("elapsed_seconds"));
  CHECK(nlohmann::json::parse(render_report(r, ReportFormat::kJson)).contains("elapsed_seconds"));
  const std::string md = render_report(r, ReportFormat::kMarkdown, false);
  CHECK(md.find("**Verdict:** PASS") != std::string::npos);
  CHECK(md.find("Elapsed") == std::string::npos);

  cfg.jobs = 2;
  const ExperimentReport parallel = verify_cable_coefficients(cfg);
  CHECK(render_report(parallel, ReportFormat::kJson, false) == json);
  CHECK(render_report(verify_cable_coefficients(small_config("3: 1 2")), ReportFormat::kJson, false) == json);
}

TEST_CASE("rendering edge cases") {
  const auto empty = nlohmann::json::parse(render_report(ExperimentReport{}, ReportFormat::kJson, false));
  CHECK(empty.at("verdict") == "PASS");
  CHECK(empty.at("slices").empty());
  ExperimentReport one;
  one.kind = "cable-coefficients";
  one.slices.push_back(SliceComparison{"(2,1)-cable", 1, 0, LaurentPoly(Integer(1)), LaurentPoly(Integer(1)), true, true});
  const std::string md = render_report(one, ReportFormat::kMarkdown, false);
  CHECK(md.find("| (2,1)-cable | 1 | 0 | 1 | 1 | yes |") != std::string::npos);
}

TEST_CASE("verdict logic") {
  ExperimentReport r;
  CHECK(r.verdict() == Verdict::kPass);
  r.slices.push_back(SliceComparison{"p", 1, 0, LaurentPoly(Integer(1)), LaurentPoly(), false, false});
  CHECK(r.verdict() == Verdict::kPass);
  r.slices.back().asserted = true;
  CHECK(r.verdict() == Verdict::kFalsified);
  ExperimentReport c;
  c.checks.push_back(CheckTally{"x", 1, 1, {}});
  CHECK(c.verdict() == Verdict::kFalsified);
  ExperimentReport i;
  i.implications.push_back(ImplicationCheck{0, 3, true, false});
  CHECK(i.verdict() == Verdict::kFalsified);
}
