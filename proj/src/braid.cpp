#include "knotpoly/braid.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace knotpoly {

namespace {

void check_letter(int strands, int g) {
  if (g == 0 || std::abs(g) > strands - 1)
    throw Error("braid letter " + std::to_string(g) + " out of range for " + std::to_string(strands) +
                " strands");
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw Error("braid must have at least one strand");
}

BraidWord::BraidWord(int strands, std::vector<int> letters) : BraidWord(strands) {
  for (int g : letters) check_letter(strands_, g);
  letters_ = std::move(letters);
}

BraidWord BraidWord::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("braid word must look like \"m: g1 g2 ...\"");
  auto read_int = [](std::string_view tok) {
    int value = 0;
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw ParseError("bad integer in braid word: '" + std::string(tok) + "'");
    return value;
  };
  std::string_view head = text.substr(0, colon);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.front()))) head.remove_prefix(1);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.remove_suffix(1);
  const int strands = read_int(head);
  if (strands < 1) throw ParseError("braid strand count must be positive");

  std::vector<int> letters;
  std::string_view rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    while (pos < rest.size() && (std::isspace(static_cast<unsigned char>(rest[pos])) || rest[pos] == ',')) ++pos;
    std::size_t start = pos;
    while (pos < rest.size() && !std::isspace(static_cast<unsigned char>(rest[pos])) && rest[pos] != ',') ++pos;
    if (start < pos) letters.push_back(read_int(rest.substr(start, pos - start)));
  }
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

void BraidWord::append(int letter) {
  check_letter(strands_, letter);
  letters_.push_back(letter);
}

void BraidWord::append(std::span<const int> letters) {
  for (int g : letters) check_letter(strands_, g);
  letters_.insert(letters_.end(), letters.begin(), letters.end());
}

std::string BraidWord::to_string() const {
  std::string out = std::to_string(strands_) + ":";
  for (int g : letters_) {
    out += ' ';
    out += std::to_string(g);
  }
  return out;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw Error("compose: strand mismatch (" + std::to_string(a.strands()) + " vs " +
                std::to_string(b.strands()) + ")");
  BraidWord out = a;
  out.append(b.letters());
  return out;
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
  for (int& g : letters) g = -g;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<int> stack;
  stack.reserve(b.length());
  for (int g : b.letters()) {
    if (!stack.empty() && stack.back() == -g)
      stack.pop_back();
    else
      stack.push_back(g);
  }
  return BraidWord(b.strands(), std::move(stack));
}

int exponent_sum(const BraidWord& b) {
  int e = 0;
  for (int g : b.letters()) e += g > 0 ? 1 : -1;
  return e;
}

int self_linking(const BraidWord& b) { return exponent_sum(b) - b.strands(); }

Permutation permutation(const BraidWord& b) {
  Permutation at(b.strands());
  std::iota(at.begin(), at.end(), 0);
  for (int g : b.letters()) {
    const int i = std::abs(g) - 1;
    std::swap(at[i], at[i + 1]);
  }
  return at;
}

Permutation compose_permutations(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error("compose_permutations: size mismatch");
  Permutation out(p.size());
  for (std::size_t k = 0; k < q.size(); ++k) out[k] = p[q[k]];
  return out;
}

bool is_identity(const Permutation& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k)) return false;
  return true;
}

int cycle_count(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (std::size_t x = k; !seen[x]; x = static_cast<std::size_t>(p[x])) seen[x] = 1;
  }
  return cycles;
}

int component_count(const BraidWord& b) { return cycle_count(permutation(b)); }

bool is_knot(const BraidWord& b) { return component_count(b) == 1; }

BraidWord pure_braid_generator(int strands, int i, int j) {
  if (i < 1 || j <= i || j > strands)
    throw Error("pure braid generator A(" + std::to_string(i) + "," + std::to_string(j) +
                ") invalid for " + std::to_string(strands) + " strands");
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k < j; ++k) letters.push_back(-k);
  return BraidWord(strands, std::move(letters));
}

// ------------------------------------------------------------ CommutatorSpec

CommutatorSpec CommutatorSpec::leaf(int i, int j) {
  if (i < 1 || j <= i) throw Error("commutator leaf needs 1 <= i < j");
  CommutatorSpec s;
  s.i_ = i;
  s.j_ = j;
  return s;
}

CommutatorSpec CommutatorSpec::commutator(CommutatorSpec a, CommutatorSpec b) {
  CommutatorSpec s;
  s.left_ = std::make_shared<const CommutatorSpec>(std::move(a));
  s.right_ = std::make_shared<const CommutatorSpec>(std::move(b));
  return s;
}

CommutatorSpec CommutatorSpec::left_nested(int n) {
  if (n < 1) throw Error("commutator depth must be >= 1");
  if (n == 1) return leaf(1, 2);
  CommutatorSpec inner = leaf(2, 3);
  for (int k = 1; k < n; ++k) inner = commutator(leaf(1, 2), std::move(inner));
  return inner;
}

CommutatorSpec CommutatorSpec::balanced(int n, int strands) {
  if (n < 1) throw Error("commutator depth must be >= 1");
  if (strands < 3) throw Error("balanced commutators need at least 3 strands");
  std::vector<CommutatorSpec> gens;
  for (int span = 1; span < strands; ++span)
    for (int i = 1; i + span <= strands; ++i) gens.push_back(leaf(i, i + span));
  // The right subtree starts one generator later than the left so the two
  // halves of every bracket differ.
  auto build = [&](auto&& self, int count, std::size_t offset) -> CommutatorSpec {
    if (count == 1) return gens[offset % gens.size()];
    const int lhs = (count + 1) / 2;
    CommutatorSpec a = self(self, lhs, offset);
    CommutatorSpec b = self(self, count - lhs, offset + 1);
    return commutator(std::move(a), std::move(b));
  };
  return build(build, n, 0);
}

int CommutatorSpec::degree() const { return is_leaf() ? 1 : left_->degree() + right_->degree(); }

int CommutatorSpec::depth() const {
  return is_leaf() ? 1 : 1 + std::max(left_->depth(), right_->depth());
}

int CommutatorSpec::max_index() const {
  return is_leaf() ? j_ : std::max(left_->max_index(), right_->max_index());
}

std::string CommutatorSpec::to_string() const {
  if (is_leaf()) return "A(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
  return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  CommutatorSpec parse() {
    CommutatorSpec out = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return out;
  }

 private:
  CommutatorSpec expr() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] == '[') {
      ++pos_;
      CommutatorSpec a = expr();
      expect(',');
      CommutatorSpec b = expr();
      expect(']');
      return CommutatorSpec::commutator(std::move(a), std::move(b));
    }
    if (s_[pos_] == 'A') {
      ++pos_;
      expect('(');
      int i = number();
      expect(',');
      int j = number();
      expect(')');
      try {
        return CommutatorSpec::leaf(i, j);
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    fail("expected '[' or 'A'");
  }

  int number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("commutator parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CommutatorSpec CommutatorSpec::parse(std::string_view text) { return SpecParser(text).parse(); }

BraidWord realize_commutator(const CommutatorSpec& spec, int strands) {
  if (spec.is_leaf()) return pure_braid_generator(strands, spec.leaf_i(), spec.leaf_j());
  const BraidWord a = realize_commutator(spec.left(), strands);
  const BraidWord b = realize_commutator(spec.right(), strands);
  return free_reduce(compose(compose(a, b), compose(inverse(a), inverse(b))));
}

}  // namespace knotpoly
