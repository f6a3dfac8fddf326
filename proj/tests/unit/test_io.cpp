#include <random>

#include "doctest.h"
#include "knotpoly/homfly.hpp"
#include "knotpoly/io.hpp"
#include "support.hpp"

using namespace knotpoly;

TEST_CASE("polynomial JSON round trip") {
  std::mt19937 rng(61);
  for (int t = 0; t < 100; ++t) {
    const BraidWord b = testing::random_word(rng, 4, 10);
    const TwoVarPoly p = homfly(b);
    CHECK(poly_from_json(poly_to_json(p)) == p);
  }
  CHECK(poly_to_json(TwoVarPoly()) == "[]");
  CHECK(poly_to_json(TwoVarPoly::term(Integer(-3), 2, 1)) == R"([{"v":2,"z":1,"c":-3}])");
  CHECK(poly_to_json(LaurentPoly{{-1, 1}, {0, -1}, {1, 1}}, 't') ==
        R"([{"t":-1,"c":1},{"t":0,"c":-1},{"t":1,"c":1}])");
}

TEST_CASE("large coefficients become strings") {
  const Integer big("123456789012345678901234567890");
  const TwoVarPoly p = TwoVarPoly::term(big, 0, 0);
  const std::string text = poly_to_json(p);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(poly_from_json(text) == p);
  CHECK_THROWS_AS(poly_from_json(R"([{"v":0,"z":0,"c":"x1"}])"), ParseError);
  CHECK_THROWS_AS(poly_from_json(R"({"v":0})"), ParseError);
  CHECK_THROWS_AS(poly_from_json("[{"), ParseError);
}

TEST_CASE("braids and patterns") {
  CHECK(braid_to_json(BraidWord::parse("3: 1 -2")) == R"({"strands":3,"letters":[1,-2],"text":"3: 1 -2"})");
  const Pattern p = cable_pattern(3, 1);
  CHECK(pattern_from_json(pattern_to_json(p)) == p);
  CHECK(pattern_from_json(R"({"winding": 2, "word": [1]})").word() == BraidWord::parse("2: 1"));
  CHECK_THROWS_AS(pattern_from_json(R"({"winding": 3, "word": "2: 1"})"), ParseError);
  CHECK_THROWS_AS(pattern_from_json(R"({"word": [1]})"), ParseError);
  CHECK_THROWS_AS(pattern_from_json(R"({"word": "2: 1 1"})"), Error);
}

TEST_CASE("experiment configs") {
  const ExperimentConfig cfg = config_from_json(R"({
    "base": "3: 1 1 1 2", "N": 1, "w": 2, "n": 14, "family_size": 2,
    "gamma": "balanced", "jobs": 2, "title": "t", "hecke_budget": 1e9,
    "patterns": [{"word": "2: 1", "name": "(2,1)-cable"}]})");
  CHECK(cfg.base == BraidWord::parse("3: 1 1 1 2"));
  CHECK(cfg.N == 1);
  CHECK(cfg.w == 2);
  CHECK(cfg.depth() == 14);
  CHECK(cfg.family_size == 2);
  CHECK(cfg.jobs == 2);
  CHECK(cfg.title == "t");
  CHECK(cfg.hecke_budget == 1e9);
  REQUIRE(cfg.gamma.has_value());
  CHECK(cfg.gamma->degree() == 14);
  REQUIRE(cfg.patterns.size() == 1);
  CHECK(cfg.patterns[0].name() == "(2,1)-cable");

  const ExperimentConfig plain = config_from_json(R"({"base": "3: 1 2"})");
  CHECK(plain.depth() == 6);
  CHECK_FALSE(plain.gamma.has_value());
  CHECK(config_from_json(R"({"base": "3: 1 2", "gamma": "[A(1,2),A(2,3)]"})").gamma->depth() == 2);

  CHECK_THROWS_AS(config_from_json(R"({"base": "3: 1 2", "colour": 1})"), ParseError);
  CHECK_THROWS_AS(config_from_json(R"({"N": 1})"), ParseError);
  CHECK_THROWS_AS(config_from_json("[]"), ParseError);
  CHECK_THROWS_AS(config_from_json(R"({"base": "3: 1 2", "N": "one"})"), ParseError);
}
