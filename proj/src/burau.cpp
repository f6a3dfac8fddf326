#include "knotpoly/burau.hpp"

#include <cstdlib>
#include <utility>

namespace knotpoly {

BurauMatrix BurauMatrix::identity(std::size_t n) {
  BurauMatrix m;
  m.n_ = n;
  m.entries_.assign(n * n, LaurentPoly());
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = LaurentPoly(Integer(1));
  return m;
}

BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
  if (a.n_ != b.n_) throw Error("Burau matrix size mismatch");
  BurauMatrix out = BurauMatrix::identity(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r)
    for (std::size_t c = 0; c < a.n_; ++c) {
      LaurentPoly s;
      for (std::size_t k = 0; k < a.n_; ++k) s += a.at(r, k) * b.at(k, c);
      out.at(r, c) = std::move(s);
    }
  return out;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error("divide_exact: division by zero");
  if (a.is_zero()) return a;
  // Ordinary long division on dense coefficient vectors, highest degree first.
  const int alow = a.min_degree();
  const int blow = b.min_degree();
  std::vector<Integer> rem(static_cast<std::size_t>(a.max_degree() - alow + 1));
  for (const auto& [e, c] : a.terms()) rem[static_cast<std::size_t>(e - alow)] = c;
  std::vector<Integer> div(static_cast<std::size_t>(b.max_degree() - blow + 1));
  for (const auto& [e, c] : b.terms()) div[static_cast<std::size_t>(e - blow)] = c;
  if (rem.size() < div.size()) throw Error("divide_exact: nonzero remainder");
  const Integer& lead = div.back();
  std::vector<Integer> quot(rem.size() - div.size() + 1);
  Integer q;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + div.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw Error("divide_exact: non-integral quotient");
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t i = 0; i < div.size(); ++i)
      if (div[i] != 0) mpz_submul(rem[k + i].get_mpz_t(), q.get_mpz_t(), div[i].get_mpz_t());
    quot[k] = q;
  }
  for (const Integer& r : rem)
    if (r != 0) throw Error("divide_exact: nonzero remainder");
  LaurentPoly out;
  for (std::size_t k = 0; k < quot.size(); ++k)
    if (quot[k] != 0) out.add_term(alow - blow + static_cast<int>(k), quot[k]);
  return out;
}

LaurentPoly BurauMatrix::determinant() const {
  if (n_ == 0) return LaurentPoly(Integer(1));
  std::vector<LaurentPoly> m = entries_;
  auto el = [&](std::size_t r, std::size_t c) -> LaurentPoly& { return m[r * n_ + c]; };
  LaurentPoly prev(Integer(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (el(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n_ && el(p, k).is_zero()) ++p;
      if (p == n_) return LaurentPoly();
      for (std::size_t c = 0; c < n_; ++c) std::swap(el(k, c), el(p, c));
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < n_; ++r) {
      for (std::size_t c = k + 1; c < n_; ++c)
        el(r, c) = divide_exact(el(k, k) * el(r, c) - el(r, k) * el(k, c), prev);
      el(r, k) = LaurentPoly();
    }
    prev = el(k, k);
  }
  LaurentPoly d = el(n_ - 1, n_ - 1);
  return negate ? d * LaurentPoly(Integer(-1)) : d;
}

namespace {

// Dense Laurent polynomial: coeffs[k] multiplies t^{low + k}. Burau entries of
// long words are nearly dense, where std::map-backed arithmetic is slow.
struct Dense {
  int low = 0;
  std::vector<Integer> coeffs;

  [[nodiscard]] bool is_zero() const { return coeffs.empty(); }

  // this += sign * t^shift * other
  void add_shifted(const Dense& other, int shift, int sign) {
    if (other.is_zero()) return;
    const int olow = other.low + shift;
    const int ohigh = olow + static_cast<int>(other.coeffs.size());
    if (is_zero()) {
      low = olow;
      coeffs.assign(other.coeffs.size(), Integer(0));
    } else {
      const int high = low + static_cast<int>(coeffs.size());
      if (olow < low) {
        coeffs.insert(coeffs.begin(), static_cast<std::size_t>(low - olow), Integer(0));
        low = olow;
      }
      if (ohigh > high) coeffs.resize(coeffs.size() + static_cast<std::size_t>(ohigh - high), Integer(0));
    }
    const auto base = static_cast<std::size_t>(olow - low);
    for (std::size_t k = 0; k < other.coeffs.size(); ++k) {
      if (sign > 0)
        coeffs[base + k] += other.coeffs[k];
      else
        coeffs[base + k] -= other.coeffs[k];
    }
    trim();
  }

  void trim() {
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    if (lead == coeffs.size()) {
      coeffs.clear();
      low = 0;
      return;
    }
    while (coeffs.back() == 0) coeffs.pop_back();
    if (lead > 0) {
      coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
      low += static_cast<int>(lead);
    }
  }

  [[nodiscard]] LaurentPoly to_laurent() const {
    LaurentPoly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) out.add_term(low + static_cast<int>(k), coeffs[k]);
    return out;
  }
};

// Image of letters[lo, hi) by column updates on dense entries.
BurauMatrix burau_direct(const std::vector<int>& letters, std::size_t lo, std::size_t hi, std::size_t n) {
  std::vector<Dense> e(n * n);
  for (std::size_t k = 0; k < n; ++k) e[k * n + k] = Dense{0, {Integer(1)}};
  // Right multiplication by a generator touches columns k-1, k, k+1 only.
  for (std::size_t pos = lo; pos < hi; ++pos) {
    const int g = letters[pos];
    const auto k = static_cast<std::size_t>(std::abs(g) - 1);
    for (std::size_t r = 0; r < n; ++r) {
      Dense col = e[r * n + k];
      if (col.is_zero()) continue;
      if (k > 0) e[r * n + k - 1].add_shifted(col, g > 0 ? 1 : 0, 1);
      if (k + 1 < n) e[r * n + k + 1].add_shifted(col, g > 0 ? 0 : -1, 1);
      Dense& mid = e[r * n + k];
      mid.low += g > 0 ? 1 : -1;
      for (Integer& c : mid.coeffs) c = -c;
    }
  }
  BurauMatrix out = BurauMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = e[r * n + c].to_laurent();
  return out;
}

// Long words split in halves so the big entries meet in a few large products.
BurauMatrix burau_range(const std::vector<int>& letters, std::size_t lo, std::size_t hi, std::size_t n) {
  constexpr std::size_t kDirect = 256;
  if (hi - lo <= kDirect) return burau_direct(letters, lo, hi, n);
  const std::size_t mid = lo + (hi - lo) / 2;
  return burau_range(letters, lo, mid, n) * burau_range(letters, mid, hi, n);
}

}  // namespace

BurauMatrix reduced_burau(const BraidWord& b) {
  const int m = b.strands();
  if (m < 2) throw Error("reduced Burau representation needs at least 2 strands");
  return burau_range(b.letters(), 0, b.length(), static_cast<std::size_t>(m - 1));
}

LaurentPoly alexander(const BraidWord& b) {
  if (!is_knot(b)) throw Error("alexander: " + b.to_string() + " does not close to a knot");
  const int m = b.strands();
  if (m == 1) return LaurentPoly(Integer(1));
  BurauMatrix a = reduced_burau(b);
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a.at(r, c) = (r == c ? LaurentPoly(Integer(1)) : LaurentPoly()) - a.at(r, c);
  const LaurentPoly one_minus_t{{0, Integer(1)}, {1, Integer(-1)}};
  const LaurentPoly one_minus_tm{{0, Integer(1)}, {m, Integer(-1)}};
  LaurentPoly delta = divide_exact(a.determinant() * one_minus_t, one_minus_tm);
  if (delta.is_zero()) throw Error("alexander: vanishing determinant for a knot");
  const int lo = delta.min_degree();
  const int hi = delta.max_degree();
  if ((lo + hi) % 2 != 0) throw Error("alexander: odd breadth, Burau convention bug");
  delta = delta.shifted(-(lo + hi) / 2);
  const Integer at_one = delta.evaluate_at_one();
  if (at_one == -1)
    delta = delta * LaurentPoly(Integer(-1));
  else if (at_one != 1)
    throw Error("alexander: Delta(1) = " + at_one.get_str() + ", expected +-1");
  return delta;
}

LaurentPoly alexander_from_homfly(const TwoVarPoly& p) {
  if (p.is_zero()) return LaurentPoly();
  std::vector<Integer> conway;  // coefficient of u^k, u = z^2
  for (const auto& [j, slice] : p.slices()) {
    if (j < 0 || j % 2 != 0) throw Error("alexander_from_homfly: z^" + std::to_string(j) + " term in a knot polynomial");
    const auto k = static_cast<std::size_t>(j / 2);
    if (conway.size() <= k) conway.resize(k + 1);
    conway[k] = slice.evaluate_at_one();
  }
  // Horner in u = t - 2 + t^{-1}; acc[d + K] holds the coefficient of t^d.
  const std::size_t top = conway.size() - 1;
  std::vector<Integer> acc(2 * top + 3);
  std::vector<Integer> next(acc.size());
  const std::size_t centre = top + 1;
  for (std::size_t k = conway.size(); k-- > 0;) {
    if (k != top) {
      // After top - k steps only t^{-(top-k)} .. t^{top-k} can be nonzero.
      const std::size_t r = top - k;
      for (std::size_t i = centre - r; i <= centre + r; ++i) {
        next[i] = acc[i - 1] + acc[i + 1];
        mpz_submul_ui(next[i].get_mpz_t(), acc[i].get_mpz_t(), 2);
      }
      std::swap(acc, next);
    }
    acc[centre] += conway[k];
  }
  LaurentPoly out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.add_term(static_cast<int>(i) - static_cast<int>(centre), acc[i]);
  return out;
}

}  // namespace knotpoly
