#pragma once

#include "superholonomy/grassmann.hpp"
#include "superholonomy/random.hpp"
#include "superholonomy/supermatrix.hpp"

namespace testing_helpers {

using namespace superholonomy;

inline GrassmannElement random_element(int N, Rng& rng, int parity = -1, double scale = 1.0) {
  std::vector<GrassmannElement::Term> terms;
  for (Monomial mono = 0; mono < (1u << N); ++mono) {
    if (parity >= 0 && degree(mono) % 2 != parity) continue;
    if (coin(rng)) terms.emplace_back(mono, uniform(rng, -scale, scale));
  }
  return GrassmannElement(N, terms);
}

inline SuperMatrix random_supermatrix(int m, int n, int N, Rng& rng, Parity p = Parity::Even,
                                      double scale = 1.0) {
  GMatrix g(m + n, m + n, N);
  for (int i = 0; i < m + n; ++i)
    for (int j = 0; j < m + n; ++j) {
      const int block = (i < m ? 0 : 1) ^ (j < m ? 0 : 1);
      g(i, j) = random_element(N, rng, block ^ as_int(p), scale);
    }
  return SuperMatrix(m, n, g, p);
}

}  // namespace testing_helpers
