#pragma once

// HOMFLY polynomial of closed braids in the convention
//   v^{-1} P(L+) - v P(L-) = z P(L0),  P(unknot) = 1.
//
// The engine evaluates the Ocneanu trace on the Hecke algebra H_m over Z[z]
// with T_i^2 = 1 + z T_i. The oracle resolves crossings of the braid diagram
// directly and shares nothing with the engine beyond the skein relation.

#include <cstddef>
#include <optional>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/poly.hpp"

namespace knotpoly {

inline constexpr int kMaxHeckeStrands = 9;

/// Dense polynomial in z with nonnegative exponents.
using ZPoly = std::vector<Integer>;

/// Element of H_m written in the basis T_w, w in S_m, with Z[z] coefficients.
/// Optionally reduced modulo z^truncation.
class HeckeElement {
 public:
  /// Identity element. truncation = std::nullopt keeps every power of z.
  explicit HeckeElement(int strands, std::optional<int> truncation = std::nullopt);

  [[nodiscard]] int strands() const { return strands_; }
  [[nodiscard]] std::size_t dimension() const { return coeffs_.size(); }
  [[nodiscard]] std::optional<int> truncation() const { return truncation_; }

  /// Right multiplication by T_{|g|}^{sign g}.
  void multiply_generator(int letter);
  void multiply_word(const BraidWord& word);

  /// Coefficient of T_w, w given in 0-based one-line notation.
  [[nodiscard]] ZPoly coefficient(const std::vector<int>& w) const;
  [[nodiscard]] const ZPoly& coefficient_by_rank(std::size_t rank) const { return coeffs_[rank]; }

 private:
  int strands_;
  std::optional<int> truncation_;
  std::vector<ZPoly> coeffs_;
};

/// z^{m-1} P as assembled from the trace of h and the exponent sum of the word.
/// Exact in z-degrees below truncation - m + 1 when h is truncated.
TwoVarPoly markov_trace(const HeckeElement& h, int exponent_sum);

/// HOMFLY polynomial of the closure, all z-degrees.
TwoVarPoly homfly(const BraidWord& b);

/// HOMFLY polynomial of the closure keeping only z-degrees <= max_z_degree.
/// The kept coefficients are exact.
TwoVarPoly homfly_truncated(const BraidWord& b, int max_z_degree);

/// Independent skein-tree evaluation. Throws BudgetExceeded when the word is
/// longer than max_crossings.
TwoVarPoly homfly_oracle(const BraidWord& b, std::size_t max_crossings = 14);

/// Morton-Franks-Williams: v-breadth of P <= 2(strands - 1).
bool mfw_check(const TwoVarPoly& p, int strands);

}  // namespace knotpoly
