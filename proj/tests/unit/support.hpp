#pragma once

#include <random>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/poly.hpp"

namespace testing {

inline knotpoly::BraidWord random_word(std::mt19937& rng, int max_strands, int max_letters) {
  const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_strands));
  std::vector<int> letters;
  if (m > 1) {
    const int len = static_cast<int>(rng() % static_cast<unsigned>(max_letters + 1));
    for (int k = 0; k < len; ++k) {
      const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
      letters.push_back(rng() % 2 ? g : -g);
    }
  }
  return knotpoly::BraidWord(m, letters);
}

inline knotpoly::LaurentPoly random_laurent(std::mt19937& rng, int max_breadth, int max_coeff = 9) {
  knotpoly::LaurentPoly f;
  const int low = static_cast<int>(rng() % 11) - 5;
  const int b = static_cast<int>(rng() % static_cast<unsigned>(max_breadth + 1));
  for (int e = low; e <= low + b; ++e) {
    if (rng() % 3 == 0) continue;
    f.add_term(e, static_cast<long>(rng() % static_cast<unsigned>(2 * max_coeff + 1)) - max_coeff);
  }
  return f;
}

}  // namespace testing
