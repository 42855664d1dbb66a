#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rigidlab/polynomial.hpp"

namespace rigidlab {

/// Bounds on a Buchberger run. Exceeding either raises ResourceLimitError.
struct GroebnerLimits {
  std::size_t max_pairs = 100'000;
  std::size_t max_basis = 5'000;

  /// Parses "pairs=N,basis=M" (either key optional). Throws InputError.
  static GroebnerLimits parse(std::string_view text);
  static GroebnerLimits parse(std::string_view text, GroebnerLimits base);
  /// Defaults overridden by the RIGIDLAB_LIMITS environment variable, if set.
  static GroebnerLimits from_env();
};

/// How S-pairs with equal lcm are ordered by the normal selection strategy.
enum class PairTieBreak { ascending_index, descending_index };

struct BuchbergerOptions {
  GroebnerLimits limits{};
  PairTieBreak tie_break = PairTieBreak::ascending_index;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

struct IdealBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order;
  bool reduced = false;
  BuchbergerStats stats{};

  bool is_unit() const;
};

/// Full reduction of `f` by `divisors` under `order`. At each step the first
/// divisor (in list order) whose leading monomial divides the current leading
/// monomial is used; irreducible leading terms move to the remainder.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const IdealBasis& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Reduced Groebner basis of the ideal generated by `gens`: monic generators
/// sorted by ascending leading monomial.
IdealBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                      const BuchbergerOptions& options = {});

bool ideal_membership(const Polynomial& f, std::span<const Polynomial> gens, const MonomialOrder& order,
                      const GroebnerLimits& limits = {});

/// Groebner basis of the elimination ideal <gens> ∩ Q[kept variables], using
/// block elimination with the dropped variables as the leading block.
IdealBasis eliminate(std::span<const Polynomial> gens, const std::set<std::string>& drop,
                     const GroebnerLimits& limits = {});

/// True when every S-polynomial of `basis` reduces to zero modulo it.
bool all_s_polynomials_reduce(const IdealBasis& basis);

}  // namespace rigidlab
