#include "knotpoly/kauffman.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

namespace knotpoly {

namespace {

struct Slot {
  std::size_t crossing;
  int slot;
};

using Quad = std::array<int, 4>;

// Occurrences of each edge label; every label occupies exactly two slots.
std::map<int, std::array<Slot, 2>> edge_occurrences(const std::vector<Quad>& xs) {
  std::map<int, std::array<Slot, 2>> occ;
  std::map<int, int> seen;
  for (std::size_t c = 0; c < xs.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      const int e = xs[c][static_cast<std::size_t>(s)];
      int& n = seen[e];
      if (n >= 2) throw Error("diagram edge " + std::to_string(e) + " appears more than twice");
      occ[e][static_cast<std::size_t>(n++)] = Slot{c, s};
    }
  for (const auto& [e, n] : seen)
    if (n != 2) throw Error("diagram edge " + std::to_string(e) + " is not closed");
  return occ;
}

Slot other_end(const std::array<Slot, 2>& ends, Slot from) {
  if (ends[0].crossing == from.crossing && ends[0].slot == from.slot) return ends[1];
  return ends[0];
}

// One walk over every component of an unoriented diagram.
struct Traversal {
  int components = 0;
  // Crossings in order of first visit, with whether that visit was on the under strand.
  std::vector<std::pair<std::size_t, bool>> first_visits;
  // Orientation induced by the walk.
  std::vector<char> under_0_to_2;
  std::vector<char> over_3_to_1;
};

Traversal traverse(const std::vector<Quad>& xs, bool reverse) {
  const auto occ = edge_occurrences(xs);
  Traversal t;
  t.under_0_to_2.assign(xs.size(), 0);
  t.over_3_to_1.assign(xs.size(), 0);
  std::vector<char> seen(xs.size(), 0);
  std::map<int, char> edge_done;
  for (const auto& [e, ends] : occ) edge_done[e] = 0;

  for (;;) {
    std::optional<int> start;
    if (!reverse) {
      for (const auto& [e, done] : edge_done)
        if (!done) {
          start = e;
          break;
        }
    } else {
      for (auto it = edge_done.rbegin(); it != edge_done.rend(); ++it)
        if (!it->second) {
          start = it->first;
          break;
        }
    }
    if (!start) break;
    ++t.components;
    const auto& start_ends = occ.at(*start);
    const Slot origin = reverse ? start_ends[1] : start_ends[0];
    Slot from = origin;
    int edge = *start;
    do {
      edge_done[edge] = 1;
      const Slot to = other_end(occ.at(edge), from);
      const std::size_t c = to.crossing;
      const bool under = (to.slot % 2) == 0;
      if (under)
        t.under_0_to_2[c] = to.slot == 0;
      else
        t.over_3_to_1[c] = to.slot == 3;
      if (!seen[c]) {
        seen[c] = 1;
        t.first_visits.emplace_back(c, under);
      }
      from = Slot{c, (to.slot + 2) % 4};
      edge = xs[c][static_cast<std::size_t>(from.slot)];
    } while (!(from.crossing == origin.crossing && from.slot == origin.slot));
  }
  return t;
}

struct Work {
  std::vector<Quad> xs;
  int loops = 0;
};

// Removes crossing idx and reconnects its four ends in the two given pairs.
Work reconnect(const Work& w, std::size_t idx, std::array<std::pair<int, int>, 2> joins) {
  Work out;
  out.loops = w.loops;
  out.xs.reserve(w.xs.size() - 1);
  for (std::size_t c = 0; c < w.xs.size(); ++c)
    if (c != idx) out.xs.push_back(w.xs[c]);
  for (std::size_t k = 0; k < 2; ++k) {
    auto [keep, drop] = joins[k];
    if (keep == drop) {
      ++out.loops;
      continue;
    }
    for (Quad& q : out.xs)
      for (int& e : q)
        if (e == drop) e = keep;
    for (std::size_t r = k + 1; r < 2; ++r) {
      if (joins[r].first == drop) joins[r].first = keep;
      if (joins[r].second == drop) joins[r].second = keep;
    }
  }
  return out;
}

// Label-independent encoding: BFS relabelling from every start, keeping the
// lexicographically smallest code.
std::string canonical_key(const Work& w) {
  const std::size_t n = w.xs.size();
  const auto occ = edge_occurrences(w.xs);
  std::vector<int> best;
  std::vector<int> code;
  std::vector<int> rot(n);
  std::vector<char> found(n);
  std::map<int, int> relabel;
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    for (int r0 : {0, 2}) {
      code.clear();
      relabel.clear();
      std::fill(found.begin(), found.end(), 0);
      queue.clear();
      queue.push_back(s);
      found[s] = 1;
      rot[s] = r0;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::size_t c = queue[qi];
        for (int k = 0; k < 4; ++k) {
          const int slot = (k + rot[c]) % 4;
          const int e = w.xs[c][static_cast<std::size_t>(slot)];
          auto [it, fresh] = relabel.try_emplace(e, static_cast<int>(relabel.size()) + 1);
          code.push_back(it->second);
          if (!fresh) continue;
          const Slot nb = other_end(occ.at(e), Slot{c, slot});
          if (!found[nb.crossing]) {
            found[nb.crossing] = 1;
            rot[nb.crossing] = nb.slot < 2 ? 0 : 2;
            queue.push_back(nb.crossing);
          }
        }
      }
      // Split pieces not reached from s keep their input order.
      for (std::size_t c = 0; c < n; ++c) {
        if (found[c]) continue;
        for (int k = 0; k < 4; ++k) {
          auto [it, fresh] = relabel.try_emplace(w.xs[c][static_cast<std::size_t>(k)], static_cast<int>(relabel.size()) + 1);
          code.push_back(it->second);
        }
      }
      if (best.empty() || code < best) best = code;
    }
  }
  std::string key;
  key.reserve(best.size() * 2 + 4);
  key += std::to_string(w.loops);
  key += '|';
  for (int v : best) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return key;
}

TwoVarPoly loop_value() {
  // delta = 1 + (v - v^{-1}) / z
  return TwoVarPoly(Integer(1)) + TwoVarPoly::term(1, 1, -1) - TwoVarPoly::term(1, -1, -1);
}

class LambdaEvaluator {
 public:
  explicit LambdaEvaluator(ResolutionOrder order) : order_(order), delta_(loop_value()) {}

  TwoVarPoly eval(const Work& w) {
    if (w.xs.empty()) return unlink(w.loops);
    std::string key = canonical_key(w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TwoVarPoly result = resolve(w);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  TwoVarPoly unlink(int circles) const {
    TwoVarPoly out(Integer(1));
    for (int k = 1; k < circles; ++k) out = out * delta_;
    return out;
  }

  TwoVarPoly resolve(const Work& w) {
    if (order_ == ResolutionOrder::kForward) {
      for (std::size_t c = 0; c < w.xs.size(); ++c) {
        const auto [a, b, cc, d] = w.xs[c];
        if (a == b || cc == d)  // positive kink
          return eval(reconnect(w, c, {{{a, d}, {b, cc}}})).shifted(1, 0);
        if (b == cc || d == a)  // negative kink
          return eval(reconnect(w, c, {{{a, b}, {cc, d}}})).shifted(-1, 0);
      }
    }

    const bool reverse = order_ == ResolutionOrder::kReverse;
    const Traversal t = traverse(w.xs, reverse);
    std::optional<std::size_t> bad;
    for (const auto& [c, under] : t.first_visits) {
      if (!under) continue;
      bad = c;
      if (!reverse) break;
    }

    if (!bad) {
      // Descending diagram: an unlink, whose writhe does not depend on orientation.
      int writhe = 0;
      for (std::size_t c = 0; c < w.xs.size(); ++c)
        writhe += t.under_0_to_2[c] == t.over_3_to_1[c] ? 1 : -1;
      return unlink(t.components + w.loops).shifted(writhe, 0);
    }

    const std::size_t c = *bad;
    const auto [a, b, cc, d] = w.xs[c];
    Work flipped = w;
    flipped.xs[c] = Quad{b, cc, d, a};
    // Orienting the under strand a->c and the over strand b->d makes this
    // crossing negative, its oriented smoothing {ad, bc}:
    //   Lambda(D) = Lambda(D+) - z Lambda({ad,bc}) + z Lambda({ab,cd})
    const TwoVarPoly oriented = eval(reconnect(w, c, {{{a, d}, {b, cc}}}));
    const TwoVarPoly other = eval(reconnect(w, c, {{{a, b}, {cc, d}}}));
    return eval(flipped) - oriented.shifted(0, 1) + other.shifted(0, 1);
  }

  ResolutionOrder order_;
  TwoVarPoly delta_;
  std::unordered_map<std::string, TwoVarPoly> memo_;
};

std::vector<Quad> quads(const Diagram& d) {
  std::vector<Quad> xs;
  xs.reserve(d.crossing_count());
  for (const Crossing& c : d.crossings()) xs.push_back(c.edges);
  return xs;
}

int mod2(int x) { return ((x % 2) + 2) % 2; }

}  // namespace

// -------------------------------------------------------------------- Diagram

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw Error("negative free loop count");
  (void)edge_occurrences(quads(*this));
}

Diagram Diagram::from_braid(const BraidWord& b) {
  const int m = b.strands();
  std::vector<int> cur(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) cur[static_cast<std::size_t>(p)] = p + 1;
  int next = m + 1;
  std::vector<Crossing> xs;
  xs.reserve(b.length());
  for (int g : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(g) - 1);
    const int tl = cur[i];
    const int tr = cur[i + 1];
    const int bl = next++;
    const int br = next++;
    // Strands run downwards; TL->BR and TR->BL. For a positive letter the
    // strand from the top right passes over.
    if (g > 0)
      xs.push_back(Crossing{{tl, bl, br, tr}, false});
    else
      xs.push_back(Crossing{{tr, tl, bl, br}, true});
    cur[i] = bl;
    cur[i + 1] = br;
  }
  int loops = 0;
  std::map<int, int> rename;
  for (int p = 0; p < m; ++p) {
    const int bottom = cur[static_cast<std::size_t>(p)];
    if (bottom == p + 1)
      ++loops;
    else
      rename[bottom] = p + 1;
  }
  // Compact labels to 1..2n in order of appearance.
  std::map<int, int> compact;
  for (Crossing& x : xs)
    for (int& e : x.edges) {
      if (auto it = rename.find(e); it != rename.end()) e = it->second;
      auto [jt, fresh] = compact.try_emplace(e, static_cast<int>(compact.size()) + 1);
      e = jt->second;
    }
  return Diagram(std::move(xs), loops);
}

int Diagram::writhe() const {
  int w = 0;
  for (const Crossing& c : crossings_) w += c.sign();
  return w;
}

int Diagram::component_count() const {
  if (crossings_.empty()) return free_loops_;
  return traverse(quads(*this), false).components + free_loops_;
}

int Diagram::split_pieces() const {
  // Crossings sharing an edge lie in one piece of the projection.
  std::map<int, int> parent;
  const auto find = [&](int e) {
    while (parent.at(e) != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const Crossing& c : crossings_)
    for (int e : c.edges) parent.emplace(e, e);
  for (const Crossing& c : crossings_)
    for (int e : c.edges) parent[find(e)] = find(c.edges[0]);
  int pieces = free_loops_;
  for (const auto& [e, p] : parent) pieces += find(e) == e ? 1 : 0;
  return pieces;
}

std::vector<int> Diagram::edge_labels() const {
  std::vector<int> out;
  for (const auto& [e, ends] : edge_occurrences(quads(*this))) out.push_back(e);
  return out;
}

Diagram Diagram::with_kink(int edge, int sign) const {
  if (sign != 1 && sign != -1) throw Error("kink sign must be +1 or -1");
  std::vector<Crossing> xs = crossings_;
  int loops = free_loops_;
  int max_label = 0;
  for (const Crossing& c : xs)
    for (int e : c.edges) max_label = std::max(max_label, e);
  int e = edge;
  int e_out = max_label + 1;
  const int loop = max_label + 2;
  if (xs.empty()) {
    if (loops < 1) throw Error("with_kink: empty diagram");
    --loops;
    e = 1;
    e_out = 1;
  } else {
    // Re-point the head of the edge at the new outgoing label.
    bool done = false;
    for (Crossing& c : xs) {
      const int over_in = c.over_forward ? 1 : 3;
      for (int s : {0, over_in}) {
        if (c.edges[static_cast<std::size_t>(s)] == e) {
          c.edges[static_cast<std::size_t>(s)] = e_out;
          done = true;
          break;
        }
      }
      if (done) break;
    }
    if (!done) throw Error("with_kink: unknown edge " + std::to_string(edge));
  }
  if (sign > 0)
    xs.push_back(Crossing{{e, e_out, loop, loop}, false});
  else
    xs.push_back(Crossing{{e, loop, loop, e_out}, true});
  return Diagram(std::move(xs), loops);
}

Diagram Diagram::switched(std::size_t index) const {
  if (index >= crossings_.size()) throw Error("switched: crossing index out of range");
  std::vector<Crossing> xs = crossings_;
  Crossing& c = xs[index];
  const auto [a, b, cc, d] = c.edges;
  if (!c.over_forward)
    c = Crossing{{d, a, b, cc}, true};
  else
    c = Crossing{{b, cc, d, a}, false};
  return Diagram(std::move(xs), free_loops_);
}

std::string Diagram::to_string() const {
  std::string out;
  for (const Crossing& c : crossings_) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(c.edges[0]) + "," + std::to_string(c.edges[1]) + "," +
           std::to_string(c.edges[2]) + "," + std::to_string(c.edges[3]) + "]";
  }
  for (int k = 0; k < free_loops_; ++k) out += out.empty() ? "O" : " O";
  return out;
}

// ------------------------------------------------------------------ Dubrovnik

UnorientedDiagram unoriented(const Diagram& d) { return UnorientedDiagram{quads(d), d.free_loops()}; }

SkeinQuadruple skein_quadruple(const UnorientedDiagram& d, std::size_t i) {
  if (i >= d.crossings.size()) throw Error("skein_quadruple: crossing index out of range");
  const Work w{d.crossings, d.free_loops};
  const auto [a, b, c, e] = d.crossings[i];
  Work plus = w;
  plus.xs[i] = Quad{b, c, e, a};
  const Work zero = reconnect(w, i, {{{a, e}, {b, c}}});
  const Work infinity = reconnect(w, i, {{{a, b}, {c, e}}});
  return SkeinQuadruple{{plus.xs, plus.loops}, d, {zero.xs, zero.loops}, {infinity.xs, infinity.loops}};
}

TwoVarPoly dubrovnik_regular(const UnorientedDiagram& d, std::size_t max_crossings, ResolutionOrder order) {
  if (d.crossings.size() > max_crossings)
    throw BudgetExceeded("dubrovnik: diagram has " + std::to_string(d.crossings.size()) +
                         " crossings, exceeding max_crossings budget of " + std::to_string(max_crossings));
  if (d.free_loops < 0) throw Error("negative free loop count");
  LambdaEvaluator eval(order);
  return eval.eval(Work{d.crossings, d.free_loops});
}

TwoVarPoly dubrovnik_regular(const Diagram& d, std::size_t max_crossings, ResolutionOrder order) {
  return dubrovnik_regular(unoriented(d), max_crossings, order);
}

TwoVarPoly dubrovnik(const Diagram& d, std::size_t max_crossings, ResolutionOrder order) {
  return dubrovnik_regular(d, max_crossings, order).shifted(-d.writhe(), 0);
}

TwoVarPoly dubrovnik(const BraidWord& b, std::size_t max_crossings, ResolutionOrder order) {
  return dubrovnik(Diagram::from_braid(b), max_crossings, order);
}

namespace {

GaussianInt unit_power(int k) {
  // (i)^k
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussianInt mul(const GaussianInt& x, const GaussianInt& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

// Term c v^a z^b -> c * (i^{a_unit})^a * (i^{z_unit})^b * v^{-a} z^b, summed
// over Gaussian integers.
TwoVarPoly substitute(const TwoVarPoly& p, int a_unit, int z_unit, const char* what) {
  std::map<std::pair<int, int>, GaussianInt> acc;
  for (const auto& [b, slice] : p.slices())
    for (const auto& [a, c] : slice.terms()) {
      const GaussianInt factor = mul(unit_power(a_unit * a), unit_power(z_unit * b));
      GaussianInt& dst = acc[{-a, b}];
      dst.re += c * factor.re;
      dst.im += c * factor.im;
    }
  TwoVarPoly out;
  for (const auto& [key, g] : acc) {
    if (g.im != 0)
      throw Error(std::string(what) + ": imaginary coefficient survives at v^" + std::to_string(key.first) +
                  " z^" + std::to_string(key.second));
    out.add_term(key.first, key.second, g.re);
  }
  return out;
}

}  // namespace

TwoVarPoly kauffman_F_from_D(const TwoVarPoly& d) {
  // F(a, z) = D(-i a^{-1}, -i z)
  return substitute(d, 3, 3, "kauffman_F_from_D");
}

TwoVarPoly dubrovnik_from_kauffman_F(const TwoVarPoly& f) {
  // D(v, z) = F(-i v^{-1}, i z)
  return substitute(f, 3, 1, "dubrovnik_from_kauffman_F");
}

std::vector<std::pair<int, LaurentPoly>> dubrovnik_coefficient_polys(const TwoVarPoly& d) {
  std::vector<std::pair<int, LaurentPoly>> out;
  for (const auto& [j, slice] : d.slices()) {
    for (const auto& [e, c] : slice.terms())
      if (mod2(e) != mod2(j))
        throw Error("Dubrovnik parity violated: v^" + std::to_string(e) + " z^" + std::to_string(j));
    out.emplace_back(j, slice);
  }
  return out;
}

DegreeBoundReport degree_bound_checks(const TwoVarPoly& d, int crossing_bound, int arc_bound, int writhe) {
  DegreeBoundReport r;
  r.crossing_bound = crossing_bound;
  r.arc_bound = arc_bound < 0 ? crossing_bound + 2 : arc_bound;
  for (const auto& [j, slice] : d.slices()) {
    for (const auto& [i, c] : slice.terms()) r.max_degree_sum = std::max(r.max_degree_sum, std::abs(i + writhe) + j);
    if (breadth(slice) > 2 * (crossing_bound - j)) r.slice_breadth = false;
  }
  r.v_breadth = d.v_breadth();
  r.thistlethwaite = r.max_degree_sum <= crossing_bound;
  r.morton_beltrami = r.v_breadth <= r.arc_bound - 2;
  return r;
}

MomentVector k_invariants(const TwoVarPoly& d, int j, std::size_t count) { return moments(d.slice(j), count); }

}  // namespace knotpoly
