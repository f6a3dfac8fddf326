#include <random>

#include "doctest.h"
#include "knotpoly/braid.hpp"
#include "support.hpp"

using namespace knotpoly;

TEST_CASE("parse and print") {
  const BraidWord b = BraidWord::parse("3: 1 2 -1");
  CHECK(b.strands() == 3);
  CHECK(b.letters() == std::vector<int>{1, 2, -1});
  CHECK(b.to_string() == "3: 1 2 -1");
  CHECK(BraidWord::parse("3: 1, 2,-1") == b);
  CHECK(BraidWord::parse("1:").empty());
  CHECK_THROWS_AS(BraidWord::parse("2: 2"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("2: 0"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("1 2"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("2: x"), ParseError);
}

TEST_CASE("compose, inverse, free_reduce") {
  CHECK(compose(BraidWord(2, {1}), BraidWord(2, {-1})).letters() == std::vector<int>{1, -1});
  const BraidWord beta(3, {1, 2});
  CHECK(compose(BraidWord(3), beta) == beta);
  CHECK(compose(beta, BraidWord(3, {2, 1})).letters() == std::vector<int>{1, 2, 2, 1});
  CHECK_THROWS_AS(compose(BraidWord(2), BraidWord(3)), Error);
  CHECK(inverse(beta).letters() == std::vector<int>{-2, -1});
  CHECK(inverse(BraidWord(2)).empty());
  CHECK(inverse(BraidWord(2, {-1})).letters() == std::vector<int>{1});
  CHECK(free_reduce(BraidWord(2, {1, -1})).empty());
  CHECK(free_reduce(BraidWord(3, {1, 2, -2, -1})).empty());
  CHECK(free_reduce(BraidWord(3, {1, 2, -1})).letters() == std::vector<int>{1, 2, -1});
}

TEST_CASE("exponent sum and self-linking") {
  CHECK(exponent_sum(BraidWord(2, {1, 1, 1})) == 3);
  CHECK(self_linking(BraidWord(2, {1, 1, 1})) == 1);
  CHECK(exponent_sum(BraidWord(1)) == 0);
  CHECK(self_linking(BraidWord(1)) == -1);
  CHECK(exponent_sum(BraidWord(3, {1, -2})) == 0);
}

TEST_CASE("permutations and components") {
  CHECK(is_knot(BraidWord(3, {1, 2})));
  CHECK_FALSE(is_knot(BraidWord(2, {1, 1})));
  CHECK(component_count(BraidWord(2, {1, 1})) == 2);
  CHECK(is_knot(BraidWord(1)));
  CHECK(is_identity(permutation(BraidWord(2, {1, 1}))));
}

TEST_CASE("pure braid generators") {
  CHECK(pure_braid_generator(2, 1, 2).letters() == std::vector<int>{1, 1});
  CHECK(pure_braid_generator(3, 1, 3).letters() == std::vector<int>{2, 1, 1, -2});
  for (int m = 2; m <= 5; ++m)
    for (int i = 1; i < m; ++i)
      for (int j = i + 1; j <= m; ++j) CHECK(is_identity(permutation(pure_braid_generator(m, i, j))));
  CHECK_THROWS_AS(pure_braid_generator(3, 2, 2), Error);
  CHECK_THROWS_AS(pure_braid_generator(3, 1, 4), Error);
}

TEST_CASE("commutators") {
  CHECK(realize_commutator(CommutatorSpec::leaf(1, 2), 3).letters() == std::vector<int>{1, 1});
  const auto self = CommutatorSpec::commutator(CommutatorSpec::leaf(1, 2), CommutatorSpec::leaf(1, 2));
  CHECK(realize_commutator(self, 3).empty());
  const BraidWord c = realize_commutator(CommutatorSpec::parse("[A(1,2),A(2,3)]"), 3);
  CHECK(c.length() == 8);
  CHECK(free_reduce(c) == c);

  const auto spec = CommutatorSpec::parse("[A(1,2), [A(1,2),A(2,3)]]");
  CHECK(spec.to_string() == "[A(1,2),[A(1,2),A(2,3)]]");
  CHECK(spec.degree() == 3);
  CHECK(spec.max_index() == 3);
  CHECK(CommutatorSpec::left_nested(3).to_string() == spec.to_string());
  CHECK(CommutatorSpec::left_nested(1).to_string() == "A(1,2)");
  CHECK_THROWS_AS(CommutatorSpec::parse("[A(1,2)"), ParseError);
  CHECK_THROWS_AS(CommutatorSpec::parse("A(2,1)"), ParseError);

  for (int n = 1; n <= 10; ++n) {
    const BraidWord g = realize_commutator(CommutatorSpec::left_nested(n), 3);
    CHECK(exponent_sum(g) == (n == 1 ? 2 : 0));
    CHECK(is_identity(permutation(g)));
    CHECK(g.length() <= 4u * ((1u << n) - 1u));
    CHECK_FALSE(g.empty());
  }
  for (int n : {2, 5, 6, 12}) {
    const BraidWord g = realize_commutator(CommutatorSpec::balanced(n, 4), 4);
    CHECK(CommutatorSpec::balanced(n, 4).degree() == n);
    CHECK(is_identity(permutation(g)));
    CHECK_FALSE(g.empty());
  }
}

TEST_CASE("algebraic properties on random words") {
  std::mt19937 rng(21);
  for (int t = 0; t < 300; ++t) {
    const BraidWord a = testing::random_word(rng, 5, 12);
    std::vector<int> more;
    for (int k = 0; k < 6 && a.strands() > 1; ++k) {
      const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(a.strands() - 1));
      more.push_back(rng() % 2 ? g : -g);
    }
    const BraidWord b(a.strands(), more);
    CHECK(permutation(compose(a, b)) == compose_permutations(permutation(a), permutation(b)));
    CHECK(exponent_sum(compose(a, b)) == exponent_sum(a) + exponent_sum(b));
    CHECK(free_reduce(compose(a, inverse(a))).empty());
    const BraidWord r = free_reduce(a);
    CHECK(free_reduce(r) == r);
    CHECK(exponent_sum(r) == exponent_sum(a));
    CHECK(permutation(r) == permutation(a));
  }
}
