#pragma once

// Dubrovnik polynomial D = v^{-w} Lambda of link diagrams, where Lambda is the
// regular isotopy invariant with
//   Lambda(unknot) = 1,  Lambda(positive kink) = v Lambda,
//   Lambda(K+) - Lambda(K-) = z (Lambda(K0) - Lambda(Kinf)).
// Also the substitution to the Kauffman polynomial F and the degree checks
// that relate D to crossing number and arc index.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/poly.hpp"

namespace knotpoly {

/// Crossing in planar-diagram form: edge labels counterclockwise starting at
/// the incoming under-edge, so slots 0-2 are the under strand and 1-3 the over.
struct Crossing {
  std::array<int, 4> edges{};
  /// Over strand runs slot 1 -> slot 3 (negative crossing) rather than 3 -> 1.
  bool over_forward = false;

  [[nodiscard]] int sign() const { return over_forward ? -1 : 1; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented link diagram: crossings plus circles that meet no crossing.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<Crossing> crossings, int free_loops);

  /// Diagram of the braid closure; crossing i comes from letter i.
  static Diagram from_braid(const BraidWord& b);

  [[nodiscard]] const std::vector<Crossing>& crossings() const { return crossings_; }
  [[nodiscard]] std::size_t crossing_count() const { return crossings_.size(); }
  [[nodiscard]] int free_loops() const { return free_loops_; }
  [[nodiscard]] int writhe() const;
  [[nodiscard]] int component_count() const;
  [[nodiscard]] std::vector<int> edge_labels() const;
  /// Connected pieces of the projection, free loops included. The diagram
  /// has an arc presentation with at most crossings + 2 * pieces arcs.
  [[nodiscard]] int split_pieces() const;

  /// Inserts a Reidemeister-I kink of the given sign on an edge (or on a free
  /// loop when the diagram has no crossings).
  [[nodiscard]] Diagram with_kink(int edge, int sign) const;
  /// Flips over/under at one crossing, keeping the orientation.
  [[nodiscard]] Diagram switched(std::size_t index) const;

  /// PD notation, e.g. "X[1,4,2,5] X[3,6,4,1] ..." plus "O" per free loop.
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

enum class ResolutionOrder {
  /// Base points at the smallest edge label, first non-descending crossing,
  /// Reidemeister-I kinks removed eagerly.
  kForward,
  /// Base points at the largest edge label walked backwards, last
  /// non-descending crossing, no kink shortcut.
  kReverse,
};

inline constexpr std::size_t kDefaultDubrovnikBudget = 16;

/// Writhe-normalized Dubrovnik polynomial. Throws BudgetExceeded above
/// max_crossings.
TwoVarPoly dubrovnik(const Diagram& d, std::size_t max_crossings = kDefaultDubrovnikBudget,
                     ResolutionOrder order = ResolutionOrder::kForward);
TwoVarPoly dubrovnik(const BraidWord& b, std::size_t max_crossings = kDefaultDubrovnikBudget,
                     ResolutionOrder order = ResolutionOrder::kForward);

/// The regular isotopy invariant Lambda (no writhe normalization).
TwoVarPoly dubrovnik_regular(const Diagram& d, std::size_t max_crossings = kDefaultDubrovnikBudget,
                             ResolutionOrder order = ResolutionOrder::kForward);

/// Diagram without orientation: crossings (a, b, c, d) counterclockwise with
/// the under strand a-c. Smoothings of oriented diagrams land here.
struct UnorientedDiagram {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;
};

UnorientedDiagram unoriented(const Diagram& d);

/// The diagrams of the four-term relation at crossing i, read with the under
/// strand a->c and the over strand b->d:
///   Lambda(plus) - Lambda(minus) = z (Lambda(zero) - Lambda(infinity)).
/// minus is the input, plus its switch, zero the oriented smoothing.
struct SkeinQuadruple {
  UnorientedDiagram plus;
  UnorientedDiagram minus;
  UnorientedDiagram zero;
  UnorientedDiagram infinity;
};

SkeinQuadruple skein_quadruple(const UnorientedDiagram& d, std::size_t i);

TwoVarPoly dubrovnik_regular(const UnorientedDiagram& d, std::size_t max_crossings = kDefaultDubrovnikBudget,
                             ResolutionOrder order = ResolutionOrder::kForward);

/// Gaussian integer a + b i.
struct GaussianInt {
  Integer re;
  Integer im;
};

/// F(a, z) from D via D(v, z) = F(-i v^{-1}, i z), treating a and v as the
/// same variable. Throws Error if an imaginary part survives.
TwoVarPoly kauffman_F_from_D(const TwoVarPoly& d);
/// Inverse substitution.
TwoVarPoly dubrovnik_from_kauffman_F(const TwoVarPoly& f);

/// z-slices D^j; throws Error unless every D^j lies in v^j Z[v^{+-2}].
std::vector<std::pair<int, LaurentPoly>> dubrovnik_coefficient_polys(const TwoVarPoly& d);

struct DegreeBoundReport {
  int crossing_bound = 0;
  int arc_bound = 0;
  /// max |i| + j over the terms v^i z^j of v^writhe D (0 for the zero polynomial).
  int max_degree_sum = 0;
  int v_breadth = -2;
  bool thistlethwaite = true;
  /// breadth_v D^j <= 2(crossing_bound - j) for every j.
  bool slice_breadth = true;
  bool morton_beltrami = true;

  [[nodiscard]] bool ok() const { return thistlethwaite && slice_breadth && morton_beltrami; }
};

/// |i| + j <= crossing_bound for every term v^i z^j of Lambda = v^writhe D,
/// the regular invariant of a diagram with crossing_bound crossings and the
/// given writhe; the writhe-normalized D itself can exceed it (the trefoil
/// has a v^-5 z term). Also the shift-free consequences
/// breadth_v D^j <= 2(crossing_bound - j) and breadth_v D <= arc_bound - 2.
/// arc_bound < 0 means crossing_bound + 2, valid for connected diagrams.
DegreeBoundReport degree_bound_checks(const TwoVarPoly& d, int crossing_bound, int arc_bound = -1, int writhe = 0);

MomentVector k_invariants(const TwoVarPoly& d, int j, std::size_t count);

}  // namespace knotpoly
