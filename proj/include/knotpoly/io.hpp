#pragma once

// JSON forms of polynomials, braids, patterns and experiment configs.
// Polynomials are lists of {"v": int, "z": int, "c": int}; a coefficient that
// does not fit in 64 bits is written as a decimal string.

#include <string>
#include <string_view>

#include "knotpoly/braid.hpp"
#include "knotpoly/harness.hpp"
#include "knotpoly/poly.hpp"
#include "knotpoly/satellite.hpp"

namespace knotpoly {

std::string poly_to_json(const TwoVarPoly& p);
std::string poly_to_json(const LaurentPoly& p, char var = 'v');
TwoVarPoly poly_from_json(std::string_view text);

std::string braid_to_json(const BraidWord& b);

/// {"winding": w, "word": "w: ..." or [letters], "name": "..."}.
std::string pattern_to_json(const Pattern& p);
Pattern pattern_from_json(std::string_view text);

/// Keys: base, N, w, n, gamma (commutator text or "balanced"), family_size,
/// patterns, unsound, hecke_budget, jobs, title. Throws ParseError.
ExperimentConfig config_from_json(std::string_view text);

}  // namespace knotpoly
