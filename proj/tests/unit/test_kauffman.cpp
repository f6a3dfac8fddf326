#include <random>

#include "doctest.h"
#include "knotpoly/homfly.hpp"
#include "knotpoly/kauffman.hpp"
#include "support.hpp"

using namespace knotpoly;

namespace {

// Oracle values: both resolution orders produce them, and their Jones
// specializations match the HOMFLY engine.
const TwoVarPoly kTrefoilD = parse_poly("-v^-4 + 2*v^-2 - v^-5*z + v^-3*z - v^-4*z^2 + v^-2*z^2");
const TwoVarPoly kFigureEightD =
    parse_poly("v^-2 - 1 + v^2 + v^-1*z - v*z + v^-2*z^2 - 2*z^2 + v^2*z^2 + v^-1*z^3 - v*z^3");

// Jones polynomial in A (t = A^{-4}) from D: v = -A^3, z = A - A^{-1}.
LaurentPoly jones_from_d(const TwoVarPoly& d) {
  const LaurentPoly z{{1, 1}, {-1, -1}};
  LaurentPoly out;
  for (const auto& [q, s] : d.slices())
    for (const auto& [p, c] : s.terms())
      out += LaurentPoly::monomial(p % 2 == 0 ? c : Integer(-c), 3 * p) * z.pow(static_cast<unsigned>(q));
  return out;
}

// Same from HOMFLY: v = t = A^{-4}, z = t^{1/2} - t^{-1/2}.
LaurentPoly jones_from_p(const TwoVarPoly& p) {
  const LaurentPoly z{{-2, 1}, {2, -1}};
  LaurentPoly out;
  for (const auto& [q, s] : p.slices())
    for (const auto& [e, c] : s.terms()) out += LaurentPoly::monomial(c, -4 * e) * z.pow(static_cast<unsigned>(q));
  return out;
}

}  // namespace

TEST_CASE("diagrams from braids") {
  const Diagram d = Diagram::from_braid(BraidWord(2, {1, 1, 1}));
  CHECK(d.crossing_count() == 3);
  CHECK(d.writhe() == 3);
  CHECK(d.component_count() == 1);
  CHECK(d.to_string() == "X[1,2,3,4] X[2,5,6,3] X[5,1,4,6]");
  CHECK(Diagram::from_braid(BraidWord(3)).to_string() == "O O O");
  CHECK(Diagram::from_braid(BraidWord(3)).split_pieces() == 3);
  CHECK(d.split_pieces() == 1);
  CHECK(Diagram::from_braid(BraidWord(4, {1, 3})).split_pieces() == 2);
  CHECK(Diagram::from_braid(BraidWord(4, {1, 2})).split_pieces() == 2);
  CHECK(Diagram::from_braid(BraidWord(2, {1, 1})).component_count() == 2);
  CHECK(Diagram::from_braid(BraidWord(3, {1, -2, 1, -2})).writhe() == 0);
  const Diagram s = d.switched(1);
  CHECK(s.writhe() == 1);
  CHECK(s.switched(1).writhe() == 3);
}

TEST_CASE("Dubrovnik table values in both resolution orders") {
  for (auto order : {ResolutionOrder::kForward, ResolutionOrder::kReverse}) {
    CHECK(dubrovnik(Diagram({}, 1), 16, order) == TwoVarPoly(Integer(1)));
    CHECK(dubrovnik(BraidWord(1), 16, order) == TwoVarPoly(Integer(1)));
    CHECK(dubrovnik(BraidWord(2, {1}), 16, order) == TwoVarPoly(Integer(1)));
    CHECK(dubrovnik(BraidWord(2, {1, 1, 1}), 16, order) == kTrefoilD);
    CHECK(dubrovnik(BraidWord(3, {1, -2, 1, -2}), 16, order) == kFigureEightD);
  }
}

TEST_CASE("mirror image replaces (v, z) by (1/v, -z)") {
  const TwoVarPoly left = dubrovnik(BraidWord(2, {-1, -1, -1}));
  TwoVarPoly expected;
  for (const auto& [q, s] : kTrefoilD.slices())
    for (const auto& [p, c] : s.terms()) expected.add_term(-p, q, q % 2 == 0 ? c : Integer(-c));
  CHECK(left == expected);
}

TEST_CASE("resolution orders, kinks and the Jones specialization on random braids") {
  std::mt19937 rng(41);
  for (int t = 0; t < 150; ++t) {
    const BraidWord b = testing::random_word(rng, 4, 9);
    const Diagram d = Diagram::from_braid(b);
    const TwoVarPoly fwd = dubrovnik(d);
    CHECK(dubrovnik(d, 16, ResolutionOrder::kReverse) == fwd);
    const std::vector<int> labels = d.edge_labels();
    const int edge = labels.empty() ? 1 : labels[rng() % labels.size()];
    const Diagram kinked = d.with_kink(edge, rng() % 2 ? 1 : -1);
    CHECK(kinked.crossing_count() == d.crossing_count() + 1);
    CHECK(dubrovnik(kinked, 16, ResolutionOrder::kReverse) == fwd);
    if (is_knot(b)) {
      CHECK(jones_from_d(fwd) == jones_from_p(homfly(b)));
      CHECK_NOTHROW(dubrovnik_coefficient_polys(fwd));
    }
  }
}

TEST_CASE("four-term relation at random crossings") {
  std::mt19937 rng(42);
  int checked = 0;
  while (checked < 100) {
    const BraidWord b = testing::random_word(rng, 4, 9);
    if (b.empty()) continue;
    const UnorientedDiagram u = unoriented(Diagram::from_braid(b));
    const SkeinQuadruple q = skein_quadruple(u, rng() % u.crossings.size());
    const auto lam = [](const UnorientedDiagram& x) {
      return dubrovnik_regular(x, 16, ResolutionOrder::kReverse);
    };
    CHECK(lam(q.plus) - lam(q.minus) == (lam(q.zero) - lam(q.infinity)).shifted(0, 1));
    ++checked;
  }
}

TEST_CASE("kink relation on the unknot") {
  const Diagram o({}, 1);
  CHECK(dubrovnik_regular(o.with_kink(1, 1)) == TwoVarPoly::term(1, 1, 0));
  CHECK(dubrovnik_regular(o.with_kink(1, -1)) == TwoVarPoly::term(1, -1, 0));
}

TEST_CASE("D and F") {
  CHECK(kauffman_F_from_D(TwoVarPoly(Integer(1))) == TwoVarPoly(Integer(1)));
  for (const TwoVarPoly& d : {kTrefoilD, kFigureEightD}) CHECK(dubrovnik_from_kauffman_F(kauffman_F_from_D(d)) == d);
  CHECK(kauffman_F_from_D(kTrefoilD) ==
        parse_poly("-2*v^2 - v^4 - v^3*z - v^5*z + v^2*z^2 + v^4*z^2"));
  // A lone z has no real image: the substitution needs i + j even.
  CHECK_THROWS_AS(kauffman_F_from_D(TwoVarPoly::term(1, 0, 1)), Error);
}

TEST_CASE("coefficient polynomials and parity") {
  const auto one = dubrovnik_coefficient_polys(TwoVarPoly(Integer(1)));
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == 0);
  const auto vz = dubrovnik_coefficient_polys(TwoVarPoly::term(1, 1, 1));
  REQUIRE(vz.size() == 1);
  CHECK(vz[0] == std::pair<int, LaurentPoly>{1, LaurentPoly::monomial(1, 1)});
  CHECK_THROWS_AS(dubrovnik_coefficient_polys(TwoVarPoly::term(1, 2, 1)), Error);
  for (const auto& [j, s] : dubrovnik_coefficient_polys(kTrefoilD))
    for (const auto& [e, c] : s.terms()) CHECK((e - j) % 2 == 0);
}

TEST_CASE("degree bounds") {
  CHECK(degree_bound_checks(TwoVarPoly(Integer(1)), 0, 2).ok());
  const DegreeBoundReport trefoil = degree_bound_checks(kTrefoilD, 3, 5, 3);
  CHECK(trefoil.thistlethwaite);
  CHECK(trefoil.max_degree_sum == 3);
  CHECK(trefoil.slice_breadth);
  CHECK(trefoil.morton_beltrami);
  CHECK(trefoil.arc_bound == 5);
  CHECK(degree_bound_checks(kTrefoilD, 3).arc_bound == 5);
  // Without the writhe shift the v^-5 z term breaks the crossing bound.
  CHECK_FALSE(degree_bound_checks(kTrefoilD, 3, 5).thistlethwaite);
  CHECK_FALSE(degree_bound_checks(TwoVarPoly::term(1, 5, 0), 3, 5).thistlethwaite);
  CHECK_FALSE(degree_bound_checks(kTrefoilD, 3, 4, 3).morton_beltrami);
  CHECK_FALSE(degree_bound_checks(parse_poly("v^-4 + v^4"), 3, 20).slice_breadth);
}

TEST_CASE("bounds hold on random diagrams") {
  std::mt19937 rng(43);
  for (int t = 0; t < 150; ++t) {
    const Diagram d = Diagram::from_braid(testing::random_word(rng, 4, 10));
    const auto c = static_cast<int>(d.crossing_count());
    const DegreeBoundReport r = degree_bound_checks(dubrovnik(d), c, c + 2 * d.split_pieces(), d.writhe());
    CHECK_MESSAGE(r.ok(), d.to_string());
  }
}

TEST_CASE("k invariants") {
  CHECK(k_invariants(TwoVarPoly(Integer(1)), 0, 2) == MomentVector{1, 0});
  CHECK(k_invariants(TwoVarPoly::term(1, 1, 1), 1, 2) == MomentVector{1, 1});
  CHECK(k_invariants(kTrefoilD, 0, 3) == moments(kTrefoilD.slice(0), 3));
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(dubrovnik(BraidWord(2, std::vector<int>(17, 1))), BudgetExceeded);
}
