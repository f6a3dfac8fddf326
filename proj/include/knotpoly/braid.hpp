#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knotpoly/poly.hpp"

namespace knotpoly {

/// A word in the braid group B_m. Letter g means sigma_{|g|}^{sign(g)}.
class BraidWord {
 public:
  explicit BraidWord(int strands = 1);
  BraidWord(int strands, std::vector<int> letters);

  /// Parses "m: g1 g2 ... gk".
  static BraidWord parse(std::string_view text);

  [[nodiscard]] int strands() const { return strands_; }
  [[nodiscard]] const std::vector<int>& letters() const { return letters_; }
  [[nodiscard]] std::size_t length() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }

  void append(int letter);
  void append(std::span<const int> letters);

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);
BraidWord free_reduce(const BraidWord& b);
/// Writhe of the closed-braid diagram.
int exponent_sum(const BraidWord& b);
/// exponent_sum - strands, the self-linking number of the transverse closure.
int self_linking(const BraidWord& b);

/// One-line notation, 0-based: perm[k] is the top position of the strand that
/// ends at bottom position k. permutation(ab) = permutation(a) o permutation(b).
using Permutation = std::vector<int>;

Permutation permutation(const BraidWord& b);
Permutation compose_permutations(const Permutation& p, const Permutation& q);
bool is_identity(const Permutation& p);
int cycle_count(const Permutation& p);
/// Number of components of the closure.
int component_count(const BraidWord& b);
bool is_knot(const BraidWord& b);

/// A_{ij} = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^{-1} ... s_{j-1}^{-1}), 1 <= i < j <= m.
BraidWord pure_braid_generator(int strands, int i, int j);

/// Expression tree of group commutators over pure-braid generators.
/// A tree with n leaves realizes an element of the n-th lower central
/// series term of P_m.
class CommutatorSpec {
 public:
  static CommutatorSpec leaf(int i, int j);
  static CommutatorSpec commutator(CommutatorSpec a, CommutatorSpec b);
  /// Parses "A(1,2)" or "[x,y]" recursively.
  static CommutatorSpec parse(std::string_view text);

  /// [A12,[A12,...,[A12,A23]...]] with n leaves; n = 1 gives A12.
  static CommutatorSpec left_nested(int n);
  /// Balanced bracketing of n leaves, drawn cyclically from the generators
  /// of P_m (m >= 3). Word length grows like n^2 instead of 2^n.
  static CommutatorSpec balanced(int n, int strands);

  [[nodiscard]] bool is_leaf() const { return left_ == nullptr; }
  [[nodiscard]] int leaf_i() const { return i_; }
  [[nodiscard]] int leaf_j() const { return j_; }
  [[nodiscard]] const CommutatorSpec& left() const { return *left_; }
  [[nodiscard]] const CommutatorSpec& right() const { return *right_; }

  /// Leaf count: the lower-central-series index the realized element is in.
  [[nodiscard]] int degree() const;
  /// Nesting depth (a leaf has depth 1).
  [[nodiscard]] int depth() const;
  [[nodiscard]] int max_index() const;
  [[nodiscard]] std::string to_string() const;

 private:
  CommutatorSpec() = default;
  int i_ = 0;
  int j_ = 0;
  std::shared_ptr<const CommutatorSpec> left_;
  std::shared_ptr<const CommutatorSpec> right_;
};

/// Realizes [a,b] = a b a^{-1} b^{-1} recursively, freely reduced.
BraidWord realize_commutator(const CommutatorSpec& spec, int strands);

}  // namespace knotpoly
