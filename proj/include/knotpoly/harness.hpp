#pragma once

// Desk-scale reproduction runs: families beta*gamma^i with gamma deep in the
// lower central series of the pure braid group, their cables, and the
// coefficient-polynomial comparisons that must come out equal.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/poly.hpp"
#include "knotpoly/satellite.hpp"

namespace knotpoly {

/// Largest m*w the harness accepts.
inline constexpr int kMaxCabledStrands = 8;
/// Default ceiling on (m*w)! * total letters.
inline constexpr double kDefaultHeckeBudget = 2e10;

struct ExperimentConfig {
  BraidWord base{1};
  int N = 0;
  int w = 1;
  /// Lower central series index of gamma; defaults to the leaf count of
  /// gamma if given, else 2*m*w + 2N.
  std::optional<int> n;
  /// Defaults to the left-nested commutator of depth n.
  std::optional<CommutatorSpec> gamma;
  int family_size = 1;
  /// Defaults to the (q,1)-cables for q = 1..w.
  std::vector<Pattern> patterns;
  /// Allow n below the soundness bound; comparisons are then recorded, not asserted.
  bool unsound = false;
  double hecke_budget = kDefaultHeckeBudget;
  int jobs = 1;
  /// Coefficient polynomials every cable must match, keyed by z-degree
  /// (used for the trivial-coefficient check on unknot families).
  std::optional<std::vector<std::pair<int, LaurentPoly>>> expected_cable_slices;
  std::string title;

  [[nodiscard]] int strands() const { return base.strands(); }
  [[nodiscard]] int soundness_bound() const { return 2 * strands() * w + 2 * N; }
  [[nodiscard]] int depth() const { return n.value_or(gamma ? gamma->degree() : soundness_bound()); }
  [[nodiscard]] CommutatorSpec gamma_spec() const;
  [[nodiscard]] std::vector<Pattern> effective_patterns() const;
  /// Throws Error on inconsistent settings.
  void validate() const;
};

enum class Verdict { kPass, kFalsified };

/// P^{2j} of the cable of family member `member` against the base (member 0).
struct SliceComparison {
  std::string pattern;
  std::size_t member = 0;
  int j = 0;
  LaurentPoly base_value;
  LaurentPoly member_value;
  bool equal = false;
  bool asserted = true;
};

/// h^{2j}_i of the uncabled member against the base.
struct MomentComparison {
  std::size_t member = 0;
  int j = 0;
  int i = 0;
  Integer base_value;
  Integer member_value;
  bool equal = false;
  bool asserted = true;
};

struct Distinctness {
  std::size_t a = 0;
  std::size_t b = 0;
  /// "homfly", "alexander" or "none".
  std::string method;
  bool distinct = false;
};

struct CheckTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> details;
};

struct MemberSummary {
  std::size_t index = 0;
  std::size_t word_length = 0;
  std::optional<TwoVarPoly> homfly;
  std::optional<LaurentPoly> alexander;
};

struct ImplicationCheck {
  int j = 0;
  int moments_compared = 0;
  bool moments_equal = false;
  bool slices_equal = false;
  [[nodiscard]] bool holds() const { return !moments_equal || slices_equal; }
};

struct ExperimentReport {
  std::string title;
  std::string kind;
  bool negative_control = false;
  int strands = 0;
  int N = 0;
  int w = 0;
  int n = 0;
  std::string gamma;
  std::size_t gamma_length = 0;
  std::vector<MemberSummary> members;
  std::vector<SliceComparison> slices;
  std::vector<MomentComparison> moments;
  std::vector<Distinctness> distinctness;
  std::vector<ImplicationCheck> implications;
  std::vector<CheckTally> checks;
  std::vector<std::string> notes;
  std::size_t max_cabled_length = 0;
  double elapsed_seconds = 0.0;

  [[nodiscard]] Verdict verdict() const;
  [[nodiscard]] bool all_distinct() const;
};

/// base, base*gamma, ..., base*gamma^family_size.
std::vector<BraidWord> build_family(const ExperimentConfig& cfg);

/// Throws BudgetExceeded when the projected Hecke cost exceeds the budget.
void check_resources(const ExperimentConfig& cfg);

ExperimentReport verify_cable_coefficients(const ExperimentConfig& cfg);
/// Unknot base s_1 s_2 in B_3, (q,1)-cables for q <= p_max.
ExperimentReport verify_trivial_cables(int p_max, int N, int family_size, int jobs = 1);
ExperimentReport verify_moment_determination(const BraidWord& k, const BraidWord& k_prime);

enum class ReportFormat { kJson, kMarkdown };

/// include_timing = false drops the wall-clock field so output is byte-stable.
std::string render_report(const ExperimentReport& r, ReportFormat format, bool include_timing = true);

}  // namespace knotpoly
