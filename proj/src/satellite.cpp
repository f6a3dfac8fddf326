#include "knotpoly/satellite.hpp"

#include <cstdlib>
#include <numeric>

namespace knotpoly {

Pattern::Pattern(BraidWord word, std::string name) : word_(std::move(word)), name_(std::move(name)) {
  if (!is_knot(word_)) throw Error("pattern " + word_.to_string() + " does not close to a knot");
}

Pattern Pattern::trivial() { return Pattern(BraidWord(1), "trivial"); }

Pattern cable_pattern(int q, int f) {
  if (q < 1) throw Error("cable pattern needs q >= 1");
  if (std::gcd(q, f) != 1) throw Error("cable pattern (" + std::to_string(q) + "," + std::to_string(f) +
                                       ") closes to a link; need gcd(q, f) = 1");
  BraidWord word(q);
  const int sign = f < 0 ? -1 : 1;
  for (int r = 0; r < std::abs(f); ++r)
    for (int i = 1; i < q; ++i) word.append(sign * i);
  return Pattern(std::move(word), "(" + std::to_string(q) + "," + std::to_string(f) + ")-cable");
}

BraidWord block_crossing(int total_strands, int block, int w) {
  BraidWord out(total_strands);
  const int p0 = (block - 1) * w;
  // Strands of the left block move right one at a time, rightmost first.
  for (int a = 0; a < w; ++a)
    for (int k = p0 + w - a; k <= p0 + 2 * w - 1 - a; ++k) out.append(k);
  return out;
}

BraidWord full_twist(int total_strands, int w) {
  BraidWord out(total_strands);
  for (int r = 0; r < w; ++r)
    for (int i = 1; i < w; ++i) out.append(i);
  return out;
}

BraidWord cable(const BraidWord& beta, const Pattern& p) {
  if (!is_knot(beta)) throw Error("cable: " + beta.to_string() + " does not close to a knot");
  const int w = p.winding();
  const int total = beta.strands() * w;
  BraidWord out(total);
  if (w == 1) {
    out.append(beta.letters());
    out.append(p.word().letters());
    return out;
  }
  for (int g : beta.letters()) {
    const BraidWord block = block_crossing(total, std::abs(g), w);
    out.append((g > 0 ? block : inverse(block)).letters());
  }
  // Blackboard framing of the closed braid is its exponent sum; undo it.
  const int e = exponent_sum(beta);
  const BraidWord twist = full_twist(total, w);
  const BraidWord correction = e > 0 ? inverse(twist) : twist;
  for (int r = 0; r < std::abs(e); ++r) out.append(correction.letters());
  out.append(p.word().letters());
  return out;
}

}  // namespace knotpoly
