#include <random>

#include "doctest.h"
#include "knotpoly/homfly.hpp"
#include "support.hpp"

using namespace knotpoly;

namespace {

// Values produced by the skein-tree oracle; they match the published tables
// in this (v, z) convention.
const TwoVarPoly kTrefoil = parse_poly("-v^4 + 2*v^2 + v^2*z^2");
const TwoVarPoly kFigureEight = parse_poly("v^-2 - 1 + v^2 - z^2");

bool even_exponents(const TwoVarPoly& p) {
  for (const auto& [j, s] : p.slices()) {
    if (j % 2 != 0) return false;
    for (const auto& [e, c] : s.terms())
      if (e % 2 != 0) return false;
  }
  return true;
}

BraidWord conjugate(const BraidWord& b, int g) {
  return compose(compose(BraidWord(b.strands(), {g}), b), BraidWord(b.strands(), {-g}));
}

BraidWord stabilize(const BraidWord& b, int sign) {
  std::vector<int> letters = b.letters();
  letters.push_back(sign * b.strands());
  return BraidWord(b.strands() + 1, letters);
}

}  // namespace

TEST_CASE("table values") {
  CHECK(homfly(BraidWord(1)) == TwoVarPoly(Integer(1)));
  CHECK(homfly(BraidWord(2, {1})) == TwoVarPoly(Integer(1)));
  CHECK(homfly(BraidWord(2, {1, 1, 1})) == kTrefoil);
  CHECK(homfly_oracle(BraidWord(2, {1, 1, 1})) == kTrefoil);
  CHECK(homfly(BraidWord(3, {1, -2, 1, -2})) == kFigureEight);
  CHECK(homfly_oracle(BraidWord(3, {1, -2, 1, -2})) == kFigureEight);
  CHECK(homfly(BraidWord(3, {1, 1, 1, 2, 2, 2})) == kTrefoil * kTrefoil);
}

TEST_CASE("Hopf link satisfies the skein relation at the resolved crossing") {
  const TwoVarPoly hopf = homfly_oracle(BraidWord(2, {1, 1}));
  const TwoVarPoly lhs = homfly(BraidWord(2, {1, 1, 1})).shifted(-1, 0) - homfly(BraidWord(2, {1})).shifted(1, 0);
  CHECK(lhs == hopf.shifted(0, 1));
  CHECK(homfly(BraidWord(2, {1, 1})) == hopf);
}

TEST_CASE("engine agrees with the oracle on random words") {
  std::mt19937 rng(31);
  for (int t = 0; t < 200; ++t) {
    const BraidWord b = testing::random_word(rng, 4, 10);
    CHECK_MESSAGE(homfly(b) == homfly_oracle(b), b.to_string());
  }
}

TEST_CASE("skein identity, Markov moves, parity and MFW") {
  std::mt19937 rng(32);
  for (int t = 0; t < 100; ++t) {
    const BraidWord b = testing::random_word(rng, 5, 12);
    if (b.empty()) continue;
    const std::size_t p = rng() % b.length();
    std::vector<int> plus = b.letters(), minus = b.letters(), cut = b.letters();
    plus[p] = std::abs(plus[p]);
    minus[p] = -std::abs(minus[p]);
    cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(p));
    const int m = b.strands();
    CHECK(homfly(BraidWord(m, plus)).shifted(-1, 0) - homfly(BraidWord(m, minus)).shifted(1, 0) ==
          homfly(BraidWord(m, cut)).shifted(0, 1));

    const TwoVarPoly pb = homfly(b);
    const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
    CHECK(homfly(conjugate(b, rng() % 2 ? g : -g)) == pb);
    if (m < kMaxHeckeStrands) CHECK(homfly(stabilize(b, rng() % 2 ? 1 : -1)) == pb);
    CHECK(mfw_check(pb, m));
    if (is_knot(b)) CHECK(even_exponents(pb));
  }
}

TEST_CASE("truncated evaluation keeps low z-degrees exactly") {
  std::mt19937 rng(33);
  for (int t = 0; t < 60; ++t) {
    const BraidWord b = testing::random_word(rng, 5, 16);
    const TwoVarPoly full = homfly(b);
    for (int k : {0, 1, 2, 4}) CHECK(homfly_truncated(b, k) == full.truncated(k));
  }
}

TEST_CASE("mfw_check") {
  CHECK(mfw_check(TwoVarPoly(Integer(1)), 1));
  CHECK(mfw_check(kTrefoil, 2));
  CHECK_FALSE(mfw_check(kTrefoil, 1));
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(homfly_oracle(BraidWord(2, std::vector<int>(15, 1)), 14), BudgetExceeded);
  CHECK_THROWS_AS(homfly(BraidWord(kMaxHeckeStrands + 1)), Error);
}
