#include "knotpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace knotpoly {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Integer>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw Error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw Error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::inverted() const { return substituted_power(-1); }

LaurentPoly LaurentPoly::substituted_power(int k) const {
  if (k == 0) throw Error("substituted_power: exponent must be nonzero");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
  return out;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(Integer(1));
  LaurentPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

namespace {

// Kronecker substitution: a polynomial with coefficients below 2^(W-1) in
// absolute value becomes one integer whose W-bit slots hold the coefficients,
// so a polynomial product is a single big-integer product.
class KroneckerPacking {
 public:
  KroneckerPacking(std::size_t slots, std::size_t limbs_per_slot) : slots_(slots), width_(limbs_per_slot) {}

  [[nodiscard]] mpz_class pack(const LaurentPoly::Terms& terms, int low) const {
    mpz_class pos;
    mpz_class neg;
    mp_limb_t* p = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(slots_ * width_));
    mp_limb_t* n = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(slots_ * width_));
    std::fill(p, p + slots_ * width_, mp_limb_t(0));
    std::fill(n, n + slots_ * width_, mp_limb_t(0));
    for (const auto& [e, c] : terms) {
      mp_limb_t* dst = (sgn(c) > 0 ? p : n) + static_cast<std::size_t>(e - low) * width_;
      const mp_limb_t* src = mpz_limbs_read(c.get_mpz_t());
      std::copy(src, src + mpz_size(c.get_mpz_t()), dst);
    }
    mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(slots_ * width_));
    mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(slots_ * width_));
    return pos - neg;
  }

  // Inverse of pack for `count` slots, signed digits with carries.
  void unpack(const mpz_class& value, std::size_t count, int low, LaurentPoly::Terms& out) const {
    const bool negative = sgn(value) < 0;
    const mpz_class mag = abs(value);
    const mp_limb_t* limbs = mpz_limbs_read(mag.get_mpz_t());
    const std::size_t size = mpz_size(mag.get_mpz_t());
    mpz_class slot;
    mpz_class half;
    mpz_class full;
    mpz_setbit(full.get_mpz_t(), width_ * GMP_NUMB_BITS);
    mpz_setbit(half.get_mpz_t(), width_ * GMP_NUMB_BITS - 1);
    int carry = 0;
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t start = k * width_;
      const std::size_t avail = start < size ? std::min(width_, size - start) : 0;
      if (avail > 0)
        mpz_import(slot.get_mpz_t(), avail, -1, sizeof(mp_limb_t), 0, 0, limbs + start);
      else
        slot = 0;
      slot += carry;
      carry = 0;
      if (slot >= half) {
        slot -= full;
        carry = 1;
      }
      if (slot != 0) out.emplace_hint(out.end(), low + static_cast<int>(k), negative ? mpz_class(-slot) : slot);
    }
  }

 private:
  std::size_t slots_;
  std::size_t width_;
};

std::size_t max_bits(const LaurentPoly::Terms& terms) {
  std::size_t bits = 0;
  for (const auto& [e, c] : terms) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  const int low = a.min_degree() + b.min_degree();
  const auto span = static_cast<std::size_t>(a.max_degree() + b.max_degree() - low + 1);
  if (a.terms_.size() * b.terms_.size() >= 4096) {
    const std::size_t na = static_cast<std::size_t>(a.max_degree() - a.min_degree() + 1);
    const std::size_t nb = static_cast<std::size_t>(b.max_degree() - b.min_degree() + 1);
    std::size_t bits = max_bits(a.terms_) + max_bits(b.terms_) + 2;
    for (std::size_t k = std::min(na, nb); k > 0; k >>= 1) ++bits;
    const std::size_t width = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    const mpz_class pa = KroneckerPacking(na, width).pack(a.terms_, a.min_degree());
    const mpz_class pb = KroneckerPacking(nb, width).pack(b.terms_, b.min_degree());
    KroneckerPacking(span, width).unpack(pa * pb, span, low, out.terms_);
    return out;
  }
  std::vector<Integer> acc(span);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      mpz_addmul(acc[static_cast<std::size_t>(ea + eb - low)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0) out.terms_.emplace_hint(out.terms_.end(), low + static_cast<int>(k), std::move(acc[k]));
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

namespace {

void append_monomial(std::string& out, bool first, const Integer& c,
                     const std::vector<std::pair<char, int>>& powers) {
  Integer mag = abs(c);
  if (first) {
    if (c < 0) out += '-';
  } else {
    out += c < 0 ? " - " : " + ";
  }
  std::string body;
  bool any_var = false;
  for (const auto& [var, e] : powers) {
    if (e == 0) continue;
    if (any_var) body += '*';
    body += var;
    body += '^';
    body += std::to_string(e);
    any_var = true;
  }
  out += mag.get_str();
  if (any_var) {
    out += '*';
    out += body;
  }
}

}  // namespace

std::string LaurentPoly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_monomial(out, first, c, {{var, e}});
    first = false;
  }
  return out;
}

int breadth(const LaurentPoly& f) {
  if (f.is_zero()) return -2;
  return f.max_degree() - f.min_degree();
}

MomentVector moments(const LaurentPoly& f, std::size_t count) {
  MomentVector out(count, Integer(0));
  for (const auto& [a, c] : f.terms()) {
    Integer term = c;
    for (std::size_t i = 0; i < count; ++i) {
      out[i] += term;
      term *= a;
    }
  }
  return out;
}

LaurentPoly reconstruct(std::span<const int> support, std::span<const Integer> mom) {
  const std::size_t d = support.size();
  if (mom.size() != d) throw Error("reconstruct: moment count must equal support size");
  for (std::size_t k = 1; k < d; ++k)
    if (support[k] <= support[k - 1])
      throw Error("reconstruct: support must be strictly increasing");
  if (d == 0) return {};

  // Augmented Vandermonde system A c = f with A[i][k] = a_k^i.
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
  for (std::size_t k = 0; k < d; ++k) {
    Rational p = 1;
    for (std::size_t i = 0; i < d; ++i) {
      a[i][k] = p;
      p *= support[k];
    }
  }
  for (std::size_t i = 0; i < d; ++i) a[i][d] = Rational(mom[i]);

  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot][col] == 0) ++pivot;
    if (pivot == d) throw Error("reconstruct: singular system");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j <= d; ++j) a[col][j] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = col; j <= d; ++j) a[r][j] -= factor * a[col][j];
    }
  }

  LaurentPoly out;
  for (std::size_t k = 0; k < d; ++k) {
    const Rational& c = a[k][d];
    if (c.get_den() != 1)
      throw Error("reconstruct: moments are inconsistent with an integer polynomial on this support");
    out.add_term(support[k], c.get_num());
  }
  return out;
}

namespace {

// Size of the arithmetic progression that can carry f's support.
std::size_t support_slots(const LaurentPoly& f) {
  if (f.is_zero()) return 0;
  bool single_parity = true;
  const int parity = f.min_degree() & 1;
  for (const auto& [e, c] : f.terms())
    if ((e & 1) != parity) single_parity = false;
  const int b = breadth(f);
  return static_cast<std::size_t>(single_parity ? b / 2 + 1 : b + 1);
}

}  // namespace

std::size_t moments_needed(const LaurentPoly& f, const LaurentPoly& g) {
  return support_slots(f) + support_slots(g);
}

bool moments_determine_equal(const LaurentPoly& f, const LaurentPoly& g) {
  const std::size_t d = moments_needed(f, g);
  return moments(f, d) == moments(g, d);
}

// ----------------------------------------------------------------- TwoVarPoly

TwoVarPoly::TwoVarPoly(const LaurentPoly& z0) {
  if (!z0.is_zero()) slices_.emplace(0, z0);
}

TwoVarPoly::TwoVarPoly(const Integer& constant) : TwoVarPoly(LaurentPoly(constant)) {}

TwoVarPoly TwoVarPoly::term(const Integer& coeff, int v_exp, int z_exp) {
  TwoVarPoly p;
  p.add_term(v_exp, z_exp, coeff);
  return p;
}

LaurentPoly TwoVarPoly::slice(int z_exp) const {
  auto it = slices_.find(z_exp);
  return it == slices_.end() ? LaurentPoly{} : it->second;
}

int TwoVarPoly::min_z_degree() const {
  if (slices_.empty()) throw Error("min_z_degree of zero polynomial");
  return slices_.begin()->first;
}

int TwoVarPoly::max_z_degree() const {
  if (slices_.empty()) throw Error("max_z_degree of zero polynomial");
  return slices_.rbegin()->first;
}

int TwoVarPoly::v_breadth() const {
  if (slices_.empty()) return -2;
  int lo = slices_.begin()->second.min_degree();
  int hi = slices_.begin()->second.max_degree();
  for (const auto& [z, p] : slices_) {
    lo = std::min(lo, p.min_degree());
    hi = std::max(hi, p.max_degree());
  }
  return hi - lo;
}

std::size_t TwoVarPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& [z, p] : slices_) n += p.size();
  return n;
}

void TwoVarPoly::add_term(int v_exp, int z_exp, const Integer& coeff) {
  if (coeff == 0) return;
  auto& s = slices_[z_exp];
  s.add_term(v_exp, coeff);
  if (s.is_zero()) slices_.erase(z_exp);
}

void TwoVarPoly::add_slice(int z_exp, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto& s = slices_[z_exp];
  s += p;
  if (s.is_zero()) slices_.erase(z_exp);
}

TwoVarPoly TwoVarPoly::truncated(int max_z) const {
  TwoVarPoly out;
  for (const auto& [z, p] : slices_)
    if (z <= max_z) out.slices_.emplace(z, p);
  return out;
}

TwoVarPoly TwoVarPoly::shifted(int v_shift, int z_shift) const {
  TwoVarPoly out;
  for (const auto& [z, p] : slices_) out.slices_.emplace(z + z_shift, p.shifted(v_shift));
  return out;
}

TwoVarPoly& TwoVarPoly::operator+=(const TwoVarPoly& other) {
  for (const auto& [z, p] : other.slices_) add_slice(z, p);
  return *this;
}

TwoVarPoly& TwoVarPoly::operator-=(const TwoVarPoly& other) {
  for (const auto& [z, p] : other.slices_) add_slice(z, -p);
  return *this;
}

TwoVarPoly& TwoVarPoly::operator*=(const Integer& s) {
  if (s == 0) {
    slices_.clear();
    return *this;
  }
  for (auto& [z, p] : slices_) p *= s;
  return *this;
}

TwoVarPoly operator*(const TwoVarPoly& a, const TwoVarPoly& b) {
  TwoVarPoly out;
  for (const auto& [za, pa] : a.slices_)
    for (const auto& [zb, pb] : b.slices_) out.add_slice(za + zb, pa * pb);
  return out;
}

std::string TwoVarPoly::to_string() const {
  if (slices_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [z, p] : slices_) {
    for (const auto& [v, c] : p.terms()) {
      append_monomial(out, first, c, {{'v', v}, {'z', z}});
      first = false;
    }
  }
  return out;
}

std::vector<std::pair<int, LaurentPoly>> coefficient_polys(const TwoVarPoly& p) {
  return {p.slices().begin(), p.slices().end()};
}

MomentVector h_invariants(const TwoVarPoly& p, int j, std::size_t count) {
  return moments(p.slice(2 * j), count);
}

// -------------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  TwoVarPoly parse() {
    TwoVarPoly out;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial text");
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    parse_term(out, sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      parse_term(out, op == '-' ? -1 : 1);
    }
    return out;
  }

 private:
  void parse_term(TwoVarPoly& out, int sign) {
    skip_ws();
    Integer coeff = 1;
    int v_exp = 0;
    int z_exp = 0;
    bool saw_anything = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_unsigned();
      saw_anything = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || (peek() != 'v' && peek() != 'z')) fail("expected variable after '*'");
      }
    }
    bool saw_v = false;
    bool saw_z = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if ((c == 'v' && !saw_v && !saw_z) || (c == 'z' && !saw_z)) {
        ++pos_;
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = read_signed_int();
        }
        (c == 'v' ? v_exp : z_exp) = e;
        (c == 'v' ? saw_v : saw_z) = true;
        saw_anything = true;
        skip_ws();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_ws();
          if (at_end() || peek() != 'z' || saw_z) fail("expected 'z' after '*'");
        }
        continue;
      }
      break;
    }
    if (!saw_anything) fail("expected a term");
    out.add_term(v_exp, z_exp, sign * coeff);
  }

  Integer read_unsigned() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  int read_signed_int() {
    skip_ws();
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string_view tok = s_.substr(start, pos_ - start);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) fail("bad exponent");
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
  [[nodiscard]] char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

TwoVarPoly parse_poly(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return {};
  return PolyParser(trimmed).parse();
}

}  // namespace knotpoly
