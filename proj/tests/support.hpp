#pragma once

#include <random>

#include "dp3/laurent.hpp"

namespace dp3::testing {

// up to max_terms terms, exponents in [-2,2], coefficients in [-5,5]
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> n_terms(0, max_terms), ex(-2, 2), co(-5, 5);
  LaurentPoly p;
  int n = n_terms(rng);
  for (int t = 0; t < n; ++t) {
    ExponentVector e{};
    for (auto& x : e) x = ex(rng);
    p.add_term(e, co(rng));
  }
  return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, int max_terms = 4) {
  for (;;) {
    LaurentPoly p = random_poly(rng, max_terms);
    if (!p.is_zero()) return p;
  }
}

inline LaurentPoly x(int i) { return LaurentPoly::var(i); }

}  // namespace dp3::testing
