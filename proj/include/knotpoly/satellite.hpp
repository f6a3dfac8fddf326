#pragma once

// Braided patterns and cabling of closed braids with the 0-framing.

#include <string>

#include "knotpoly/braid.hpp"

namespace knotpoly {

/// A closed braid in the solid torus; the winding number is its strand count.
class Pattern {
 public:
  /// Throws Error unless the closure of word is a knot.
  explicit Pattern(BraidWord word, std::string name = {});

  /// Winding 1, empty word.
  static Pattern trivial();

  [[nodiscard]] int winding() const { return word_.strands(); }
  [[nodiscard]] const BraidWord& word() const { return word_; }
  [[nodiscard]] const std::string& name() const { return name_; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  BraidWord word_;
  std::string name_;
};

/// (q, f) torus pattern (s_1 ... s_{q-1})^f on q strands; requires gcd(q, f) = 1.
Pattern cable_pattern(int q, int f);

/// Positive block crossing of w-strand blocks at block positions i, i+1
/// (1-based), on total strands.
BraidWord block_crossing(int total_strands, int block, int w);

/// (s_1 ... s_{w-1})^w on the first w of total strands.
BraidWord full_twist(int total_strands, int w);

/// Braid on m*w strands whose closure is the 0-framed P-satellite of the
/// closure of beta. Throws Error unless beta closes to a knot.
BraidWord cable(const BraidWord& beta, const Pattern& p);

}  // namespace knotpoly
