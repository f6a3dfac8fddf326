#pragma once

// Exact Laurent polynomials in one variable and polynomials in z with
// Laurent-polynomial coefficients in v. All arithmetic is over GMP integers.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotpoly {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// One-variable Laurent polynomial with integer coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Integer& constant);
  LaurentPoly(std::initializer_list<std::pair<const int, Integer>> terms);

  static LaurentPoly monomial(const Integer& coeff, int exponent);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Lowest exponent; undefined for the zero polynomial.
  [[nodiscard]] int min_degree() const;
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] Integer coeff(int exponent) const;

  void add_term(int exponent, const Integer& coeff);

  /// Multiply by v^k.
  [[nodiscard]] LaurentPoly shifted(int k) const;
  /// v -> v^{-1}
  [[nodiscard]] LaurentPoly inverted() const;
  /// v -> v^k for k != 0
  [[nodiscard]] LaurentPoly substituted_power(int k) const;
  [[nodiscard]] Integer evaluate_at_one() const;
  [[nodiscard]] LaurentPoly pow(unsigned exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& s) { return a *= s; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text: terms in ascending exponent, explicit coefficients.
  [[nodiscard]] std::string to_string(char var = 'v') const;

 private:
  Terms terms_;
};

/// max degree - min degree, or -2 for the zero polynomial.
int breadth(const LaurentPoly& f);

/// f_i = sum_a c_a a^i, the i!-scaled Taylor coefficients of F(e^x).
using MomentVector = std::vector<Integer>;

MomentVector moments(const LaurentPoly& f, std::size_t count);

/// Solve the Vandermonde system sum_k c_k a_k^i = moments[i] exactly and
/// return sum_k c_k v^{a_k}. Throws Error if the solution is not integral.
LaurentPoly reconstruct(std::span<const int> support, std::span<const Integer> moments);

/// Compares the first d moments with d = breadth(F)/2 + breadth(G)/2 + 2.
/// For inputs whose exponents share one parity per polynomial this decides F == G.
bool moments_determine_equal(const LaurentPoly& f, const LaurentPoly& g);

/// Number of moments moments_determine_equal compares for this pair.
std::size_t moments_needed(const LaurentPoly& f, const LaurentPoly& g);

/// Polynomial in z (integer exponents, possibly negative for links) with
/// LaurentPoly coefficients in v.
class TwoVarPoly {
 public:
  using Slices = std::map<int, LaurentPoly>;

  TwoVarPoly() = default;
  explicit TwoVarPoly(const LaurentPoly& z0);
  explicit TwoVarPoly(const Integer& constant);

  static TwoVarPoly term(const Integer& coeff, int v_exp, int z_exp);

  [[nodiscard]] bool is_zero() const { return slices_.empty(); }
  [[nodiscard]] const Slices& slices() const { return slices_; }
  /// Coefficient polynomial of z^k (zero if absent).
  [[nodiscard]] LaurentPoly slice(int z_exp) const;
  [[nodiscard]] int min_z_degree() const;
  [[nodiscard]] int max_z_degree() const;
  /// Breadth in v over every term; -2 for zero.
  [[nodiscard]] int v_breadth() const;
  [[nodiscard]] std::size_t term_count() const;

  void add_term(int v_exp, int z_exp, const Integer& coeff);
  void add_slice(int z_exp, const LaurentPoly& p);
  /// Keep only z-degrees <= max_z.
  [[nodiscard]] TwoVarPoly truncated(int max_z) const;
  /// Multiply by v^a z^b.
  [[nodiscard]] TwoVarPoly shifted(int v_shift, int z_shift) const;

  TwoVarPoly& operator+=(const TwoVarPoly& other);
  TwoVarPoly& operator-=(const TwoVarPoly& other);
  TwoVarPoly& operator*=(const Integer& s);
  friend TwoVarPoly operator+(TwoVarPoly a, const TwoVarPoly& b) { return a += b; }
  friend TwoVarPoly operator-(TwoVarPoly a, const TwoVarPoly& b) { return a -= b; }
  friend TwoVarPoly operator*(const TwoVarPoly& a, const TwoVarPoly& b);
  friend TwoVarPoly operator*(TwoVarPoly a, const Integer& s) { return a *= s; }
  friend bool operator==(const TwoVarPoly& a, const TwoVarPoly& b) { return a.slices_ == b.slices_; }

  /// Canonical text, e.g. "2*v^2 - 1*v^4 + 1*v^2*z^2".
  [[nodiscard]] std::string to_string() const;

 private:
  Slices slices_;
};

/// z-degree slices in ascending order.
std::vector<std::pair<int, LaurentPoly>> coefficient_polys(const TwoVarPoly& p);

/// Moments of the z^{2j} coefficient polynomial.
MomentVector h_invariants(const TwoVarPoly& p, int j, std::size_t count);

/// Parses `term (('+'|'-') term)*` with term = [int '*'] ['v' '^' int] ['*'] ['z' '^' int].
TwoVarPoly parse_poly(std::string_view text);

}  // namespace knotpoly
