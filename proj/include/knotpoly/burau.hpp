#pragma once

// Reduced Burau representation and the Alexander polynomial of closed braids.

#include <cstddef>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/poly.hpp"

namespace knotpoly {

/// Square matrix over Z[t, t^{-1}] (the LaurentPoly variable is read as t).
class BurauMatrix {
 public:
  static BurauMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  LaurentPoly& at(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }

  /// Fraction-free (Bareiss) determinant.
  [[nodiscard]] LaurentPoly determinant() const;

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);
  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// Image of b; sigma_i acts as the identity except row i-1 = (t, -t, 1)
/// around the diagonal. Throws Error for fewer than 2 strands.
BurauMatrix reduced_burau(const BraidWord& b);

/// Exact quotient a / b in Z[t, t^{-1}]; throws Error on a nonzero remainder.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Alexander polynomial, normalized so Delta(t) = Delta(1/t) and Delta(1) = 1.
/// Throws Error unless the closure is a knot.
LaurentPoly alexander(const BraidWord& b);

/// Delta(t) read off a knot's HOMFLY value: P(1, z) with z = t^{1/2} - t^{-1/2}.
/// Throws Error if an odd power of z is present.
LaurentPoly alexander_from_homfly(const TwoVarPoly& p);

}  // namespace knotpoly
