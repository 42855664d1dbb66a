#pragma once

// Random polynomial generator shared by the property tests.

#include <vector>

#include "rigidlab/polynomial.hpp"
#include "rigidlab/rng.hpp"

namespace rigidlab::testing {

inline int uniform_int(SplitMix64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Up to `max_terms` terms, exponents ≤ `max_exp`, integer coefficients in [−9, 9].
inline Polynomial random_poly(SplitMix64& rng, const VarTablePtr& vars, int max_terms = 8, int max_exp = 3) {
  std::vector<Term> terms;
  int n = uniform_int(rng, 0, max_terms);
  for (int t = 0; t < n; ++t) {
    Monomial m(vars->size());
    for (std::size_t i = 0; i < vars->size(); ++i) m[i] = static_cast<std::uint32_t>(uniform_int(rng, 0, max_exp));
    terms.push_back(Term{m, Rational(uniform_int(rng, -9, 9))});
  }
  return Polynomial(vars, std::move(terms));
}

inline Monomial random_monomial(SplitMix64& rng, std::size_t nvars, int max_exp = 4) {
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars; ++i) m[i] = static_cast<std::uint32_t>(uniform_int(rng, 0, max_exp));
  return m;
}

}  // namespace rigidlab::testing
