#include "knotpoly/io.hpp"

#include <algorithm>
#include <optional>

#include "json.hpp"

namespace knotpoly {

namespace {

using Json = nlohmann::ordered_json;

Json coeff_json(const Integer& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

Integer coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    Integer out;
    if (text.empty() || text.front() == '+' || out.set_str(text, 10) != 0)
      throw ParseError("polynomial coefficient '" + text + "' is not a decimal integer");
    return out;
  }
  throw ParseError("polynomial coefficient must be an integer or a decimal string");
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

BraidWord word_from_json(const Json& j, std::optional<int> strands) {
  if (j.is_string()) return BraidWord::parse(j.get<std::string>());
  if (j.is_array() && strands) {
    std::vector<int> letters;
    for (const auto& g : j) letters.push_back(g.get<int>());
    try {
      return BraidWord(*strands, std::move(letters));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("braid must be a string \"m: g1 g2 ...\" or, with a known strand count, a list of letters");
}

Pattern pattern_from(const Json& j) {
  if (!j.is_object()) throw ParseError("pattern must be an object");
  std::optional<int> winding;
  if (j.contains("winding")) winding = j.at("winding").get<int>();
  BraidWord word = word_from_json(j.at("word"), winding);
  if (winding && word.strands() != *winding)
    throw ParseError("pattern winding " + std::to_string(*winding) + " does not match its word " + word.to_string());
  try {
    return Pattern(std::move(word), j.value("name", std::string()));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string poly_to_json(const TwoVarPoly& p) {
  Json out = Json::array();
  for (const auto& [z, slice] : p.slices())
    for (const auto& [v, c] : slice.terms()) out.push_back({{"v", v}, {"z", z}, {"c", coeff_json(c)}});
  return out.dump();
}

std::string poly_to_json(const LaurentPoly& p, char var) {
  Json out = Json::array();
  const std::string key(1, var);
  for (const auto& [e, c] : p.terms()) out.push_back({{key, e}, {"c", coeff_json(c)}});
  return out.dump();
}

TwoVarPoly poly_from_json(std::string_view text) {
  const Json j = parse(text);
  if (!j.is_array()) throw ParseError("polynomial JSON must be a list of {v, z, c}");
  TwoVarPoly out;
  try {
    for (const auto& t : j) out.add_term(t.value("v", 0), t.value("z", 0), coeff_from_json(t.at("c")));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial term: ") + e.what());
  }
  return out;
}

std::string braid_to_json(const BraidWord& b) {
  return Json{{"strands", b.strands()}, {"letters", b.letters()}, {"text", b.to_string()}}.dump();
}

std::string pattern_to_json(const Pattern& p) {
  return Json{{"winding", p.winding()}, {"word", p.word().to_string()}, {"name", p.name()}}.dump();
}

Pattern pattern_from_json(std::string_view text) {
  try {
    return pattern_from(parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad pattern: ") + e.what());
  }
}

ExperimentConfig config_from_json(std::string_view text) {
  const Json j = parse(text);
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  static const std::vector<std::string> known{"base", "N", "w", "n", "gamma", "family_size", "patterns",
                                              "unsound", "hecke_budget", "jobs", "title"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError("unknown config key: " + key);
  ExperimentConfig cfg;
  try {
    if (!j.contains("base")) throw ParseError("config needs a base braid");
    cfg.base = word_from_json(j.at("base"), std::nullopt);
    cfg.N = j.value("N", 0);
    cfg.w = j.value("w", 1);
    if (j.contains("n")) cfg.n = j.at("n").get<int>();
    cfg.family_size = j.value("family_size", 1);
    cfg.unsound = j.value("unsound", false);
    cfg.hecke_budget = j.value("hecke_budget", kDefaultHeckeBudget);
    cfg.jobs = j.value("jobs", 1);
    cfg.title = j.value("title", std::string());
    if (j.contains("gamma")) {
      const std::string g = j.at("gamma").get<std::string>();
      if (g == "balanced")
        cfg.gamma = CommutatorSpec::balanced(cfg.depth(), cfg.strands());
      else if (g != "left-nested")
        cfg.gamma = CommutatorSpec::parse(g);
    }
    if (j.contains("patterns"))
      for (const auto& p : j.at("patterns")) cfg.patterns.push_back(pattern_from(p));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad config: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return cfg;
}

}  // namespace knotpoly
