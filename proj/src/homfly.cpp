#include "knotpoly/homfly.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

namespace knotpoly {

namespace {

// ------------------------------------------------------------ S_m tables

struct TraceTerm {
  int tau;
  int z;
  long coeff;
};

struct SymmetricGroupTables {
  int m = 0;
  std::size_t order = 0;
  std::vector<std::uint8_t> perms;                   // order x m, lexicographic
  std::vector<std::vector<std::uint32_t>> ascents;   // per generator: ranks with w(i) < w(i+1)
  std::vector<std::vector<std::uint32_t>> partner;   // per generator: rank of w s_i
  std::vector<std::vector<TraceTerm>> trace;         // tr(T_w) as a polynomial in tau and z

  [[nodiscard]] std::size_t rank(const std::uint8_t* w) const {
    std::size_t r = 0;
    for (int i = 0; i < m; ++i) {
      std::size_t smaller = 0;
      for (int j = i + 1; j < m; ++j)
        if (w[j] < w[i]) ++smaller;
      r = r * static_cast<std::size_t>(m - i) + smaller;
    }
    return r;
  }

  [[nodiscard]] const std::uint8_t* perm(std::size_t r) const { return &perms[r * static_cast<std::size_t>(m)]; }
};

const SymmetricGroupTables& tables_for(int m);

// Sparse element of H_k used while building trace tables.
using SparseHecke = std::map<std::uint32_t, std::map<int, Integer>>;

void sparse_multiply(const SymmetricGroupTables& g, SparseHecke& x, int gen) {
  SparseHecke out;
  const auto& part = g.partner[static_cast<std::size_t>(gen)];
  for (const auto& [r, poly] : x) {
    const std::uint8_t* w = g.perm(r);
    const std::uint32_t s = part[r];
    auto& dst = out[s];
    for (const auto& [z, c] : poly) dst[z] += c;
    if (w[gen] > w[gen + 1]) {
      auto& self = out[r];
      for (const auto& [z, c] : poly) self[z + 1] += c;
    }
  }
  x = std::move(out);
}

std::unique_ptr<SymmetricGroupTables> build_tables(int m) {
  auto t = std::make_unique<SymmetricGroupTables>();
  t->m = m;
  std::vector<std::uint8_t> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), std::uint8_t{0});
  do {
    t->perms.insert(t->perms.end(), w.begin(), w.end());
  } while (std::next_permutation(w.begin(), w.end()));
  t->order = t->perms.size() / static_cast<std::size_t>(m);

  t->ascents.resize(static_cast<std::size_t>(std::max(m - 1, 0)));
  t->partner.resize(static_cast<std::size_t>(std::max(m - 1, 0)));
  std::vector<std::uint8_t> scratch(static_cast<std::size_t>(m));
  for (int i = 0; i + 1 < m; ++i) {
    auto& part = t->partner[static_cast<std::size_t>(i)];
    part.resize(t->order);
    for (std::size_t r = 0; r < t->order; ++r) {
      const std::uint8_t* p = t->perm(r);
      std::copy(p, p + m, scratch.begin());
      std::swap(scratch[static_cast<std::size_t>(i)], scratch[static_cast<std::size_t>(i) + 1]);
      part[r] = static_cast<std::uint32_t>(t->rank(scratch.data()));
      if (p[i] < p[i + 1]) t->ascents[static_cast<std::size_t>(i)].push_back(static_cast<std::uint32_t>(r));
    }
  }

  // Ocneanu trace: write w = u s_{m-1} s_{m-2} ... s_k with u in S_{m-1};
  // then tr(T_w) = tau tr(T_u T_{m-2} ... T_k) (or tr(T_u) when k = m).
  t->trace.resize(t->order);
  if (m == 1) {
    t->trace[0] = {TraceTerm{0, 0, 1}};
    return t;
  }
  const SymmetricGroupTables& sub = tables_for(m - 1);
  std::vector<std::uint8_t> u(static_cast<std::size_t>(m - 1));
  for (std::size_t r = 0; r < t->order; ++r) {
    const std::uint8_t* p = t->perm(r);
    const int k = static_cast<int>(std::find(p, p + m, static_cast<std::uint8_t>(m - 1)) - p);  // 0-based
    std::size_t n = 0;
    for (int x = 0; x < m; ++x)
      if (x != k) u[n++] = p[x];
    SparseHecke elem;
    elem[static_cast<std::uint32_t>(sub.rank(u.data()))][0] = 1;
    const bool has_tau = k < m - 1;
    if (has_tau)
      for (int gen = m - 3; gen >= k; --gen) sparse_multiply(sub, elem, gen);

    std::map<std::pair<int, int>, Integer> acc;
    for (const auto& [sr, poly] : elem)
      for (const auto& [z, c] : poly) {
        if (c == 0) continue;
        for (const TraceTerm& term : sub.trace[sr])
          acc[{term.tau + (has_tau ? 1 : 0), term.z + z}] += c * term.coeff;
      }
    auto& out = t->trace[r];
    for (const auto& [key, c] : acc) {
      if (c == 0) continue;
      if (!c.fits_slong_p()) throw Error("trace table coefficient overflow");
      out.push_back(TraceTerm{key.first, key.second, c.get_si()});
    }
  }
  return t;
}

const SymmetricGroupTables& tables_for(int m) {
  static std::array<std::once_flag, kMaxHeckeStrands + 1> flags;
  static std::array<std::unique_ptr<SymmetricGroupTables>, kMaxHeckeStrands + 1> cache;
  if (m < 1 || m > kMaxHeckeStrands)
    throw Error("Hecke engine supports 1.." + std::to_string(kMaxHeckeStrands) + " strands, got " +
                std::to_string(m));
  std::call_once(flags[static_cast<std::size_t>(m)], [m] { cache[static_cast<std::size_t>(m)] = build_tables(m); });
  return *cache[static_cast<std::size_t>(m)];
}

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// dst += sign * z * src, respecting the truncation bound.
void add_z_multiple(ZPoly& dst, const ZPoly& src, bool subtract, std::optional<int> truncation) {
  std::size_t want = src.size() + 1;
  if (truncation) want = std::min(want, static_cast<std::size_t>(*truncation));
  if (want <= 1) return;
  if (dst.size() < want) dst.resize(want);
  for (std::size_t k = 0; k + 1 < want; ++k) {
    if (src[k] == 0) continue;
    if (subtract)
      dst[k + 1] -= src[k];
    else
      dst[k + 1] += src[k];
  }
  trim(dst);
}

}  // namespace

// --------------------------------------------------------------- HeckeElement

HeckeElement::HeckeElement(int strands, std::optional<int> truncation)
    : strands_(strands), truncation_(truncation) {
  if (truncation_ && *truncation_ < 1) throw Error("Hecke truncation must be >= 1");
  const auto& t = tables_for(strands);
  coeffs_.resize(t.order);
  coeffs_[0] = ZPoly{Integer(1)};
}

void HeckeElement::multiply_generator(int letter) {
  const int gen = std::abs(letter) - 1;
  if (letter == 0 || gen >= strands_ - 1) throw Error("generator out of range for Hecke element");
  const auto& t = tables_for(strands_);
  const auto& part = t.partner[static_cast<std::size_t>(gen)];
  for (std::uint32_t a : t.ascents[static_cast<std::size_t>(gen)]) {
    const std::uint32_t b = part[a];
    ZPoly& ca = coeffs_[a];
    ZPoly& cb = coeffs_[b];
    if (ca.empty() && cb.empty()) continue;
    // T_a T_i = T_b and T_b T_i = T_a + z T_b.
    std::swap(ca, cb);
    if (letter > 0)
      add_z_multiple(cb, ca, false, truncation_);
    else
      add_z_multiple(ca, cb, true, truncation_);
  }
}

void HeckeElement::multiply_word(const BraidWord& word) {
  if (word.strands() != strands_) throw Error("multiply_word: strand mismatch");
  for (int g : word.letters()) multiply_generator(g);
}

ZPoly HeckeElement::coefficient(const std::vector<int>& w) const {
  if (static_cast<int>(w.size()) != strands_) throw Error("coefficient: permutation size mismatch");
  std::vector<std::uint8_t> bytes(w.begin(), w.end());
  return coeffs_[tables_for(strands_).rank(bytes.data())];
}

TwoVarPoly markov_trace(const HeckeElement& h, int exponent_sum) {
  const int m = h.strands();
  const auto& t = tables_for(m);
  const auto limit = h.truncation();

  std::vector<ZPoly> by_tau(static_cast<std::size_t>(m));
  for (std::size_t r = 0; r < t.order; ++r) {
    const ZPoly& c = h.coefficient_by_rank(r);
    if (c.empty()) continue;
    for (const TraceTerm& term : t.trace[r]) {
      ZPoly& dst = by_tau[static_cast<std::size_t>(term.tau)];
      std::size_t want = c.size() + static_cast<std::size_t>(term.z);
      if (limit) want = std::min(want, static_cast<std::size_t>(*limit));
      if (dst.size() < want) dst.resize(want);
      for (std::size_t k = 0; k < c.size() && k + static_cast<std::size_t>(term.z) < want; ++k)
        if (c[k] != 0) dst[k + static_cast<std::size_t>(term.z)] += c[k] * term.coeff;
    }
  }

  // D^{m-1} tau^k = ((v^{-1} - v)/z)^{m-1-k} v^{-k}
  const LaurentPoly delta_num{{-1, Integer(1)}, {1, Integer(-1)}};
  TwoVarPoly out;
  for (int k = 0; k < m; ++k) {
    const ZPoly& s = by_tau[static_cast<std::size_t>(k)];
    if (s.empty()) continue;
    const LaurentPoly factor = delta_num.pow(static_cast<unsigned>(m - 1 - k)).shifted(exponent_sum - k);
    for (std::size_t zd = 0; zd < s.size(); ++zd) {
      if (s[zd] == 0) continue;
      out.add_slice(static_cast<int>(zd) + k - m + 1, factor * s[zd]);
    }
  }
  if (limit) out = out.truncated(*limit - m);
  return out;
}

TwoVarPoly homfly(const BraidWord& b) {
  HeckeElement h(b.strands());
  h.multiply_word(b);
  return markov_trace(h, exponent_sum(b));
}

TwoVarPoly homfly_truncated(const BraidWord& b, int max_z_degree) {
  const int truncation = max_z_degree + b.strands();
  if (truncation < 1) throw Error("homfly_truncated: max_z_degree below the lowest possible z-degree");
  HeckeElement h(b.strands(), truncation);
  h.multiply_word(b);
  return markov_trace(h, exponent_sum(b)).truncated(max_z_degree);
}

bool mfw_check(const TwoVarPoly& p, int strands) { return p.v_breadth() <= 2 * (strands - 1); }

// ----------------------------------------------------------------- oracle

namespace {

class SkeinOracle {
 public:
  explicit SkeinOracle(int strands) : strands_(strands) {}

  TwoVarPoly eval(const std::vector<int>& word) {
    std::string key = canonical_key(word);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TwoVarPoly result = resolve(word);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Cyclic rotations of a braid word have the same closure.
  static std::string canonical_key(const std::vector<int>& word) {
    const std::size_t n = word.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        const int a = word[(r + k) % n];
        const int b = word[(best + k) % n];
        if (a != b) {
          if (a < b) best = r;
          break;
        }
      }
    }
    std::string key;
    key.reserve(n * 2);
    for (std::size_t k = 0; k < n; ++k) key.push_back(static_cast<char>(word[(best + k) % n]));
    return key;
  }

  TwoVarPoly resolve(const std::vector<int>& word) {
    const std::size_t n = word.size();
    // Walk every component from its smallest top position. Positive letters
    // put the strand arriving from the right on top.
    std::vector<char> seen_crossing(n, 0);
    std::vector<char> visited_top(static_cast<std::size_t>(strands_), 0);
    int components = 0;
    std::optional<std::size_t> bad;
    for (int start = 0; start < strands_ && !bad; ++start) {
      if (visited_top[static_cast<std::size_t>(start)]) continue;
      ++components;
      int p = start;
      do {
        visited_top[static_cast<std::size_t>(p)] = 1;
        for (std::size_t t = 0; t < n && !bad; ++t) {
          const int i = std::abs(word[t]) - 1;
          bool over;
          if (p == i) {
            over = word[t] < 0;
            p = i + 1;
          } else if (p == i + 1) {
            over = word[t] > 0;
            p = i;
          } else {
            continue;
          }
          if (!seen_crossing[t]) {
            seen_crossing[t] = 1;
            if (!over) bad = t;
          }
        }
      } while (p != start && !bad);
    }

    if (!bad) {
      // Descending diagram: an unlink of `components` circles.
      const TwoVarPoly delta = TwoVarPoly::term(1, -1, -1) - TwoVarPoly::term(1, 1, -1);
      TwoVarPoly out(Integer(1));
      for (int c = 1; c < components; ++c) out = out * delta;
      return out;
    }

    const std::size_t t = *bad;
    std::vector<int> switched = word;
    switched[t] = -switched[t];
    std::vector<int> smoothed;
    smoothed.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k)
      if (k != t) smoothed.push_back(word[k]);

    const TwoVarPoly p_switched = eval(switched);
    const TwoVarPoly p_smoothed = eval(smoothed);
    if (word[t] > 0)  // P+ = v^2 P- + v z P0
      return p_switched.shifted(2, 0) + p_smoothed.shifted(1, 1);
    // P- = v^{-2} P+ - v^{-1} z P0
    return p_switched.shifted(-2, 0) - p_smoothed.shifted(-1, 1);
  }

  int strands_;
  std::unordered_map<std::string, TwoVarPoly> memo_;
};

}  // namespace

TwoVarPoly homfly_oracle(const BraidWord& b, std::size_t max_crossings) {
  if (b.length() > max_crossings)
    throw BudgetExceeded("homfly_oracle: word has " + std::to_string(b.length()) +
                         " letters, exceeding max_crossings budget of " + std::to_string(max_crossings));
  SkeinOracle oracle(b.strands());
  return oracle.eval(b.letters());
}

}  // namespace knotpoly
