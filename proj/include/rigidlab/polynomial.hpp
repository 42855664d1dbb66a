#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rigidlab/monomial.hpp"
#include "rigidlab/var_table.hpp"

namespace rigidlab {

using Rational = mpq_class;

struct Term {
  Monomial mono;
  Rational coeff;

  bool operator==(const Term& other) const { return mono == other.mono && coeff == other.coeff; }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by descending grevlex with no zero coefficients, so
/// two polynomials over the same table are equal iff their term lists are.
/// Instances are immutable values; every operation returns a new polynomial.
class Polynomial {
 public:
  /// The zero polynomial over `vars`.
  explicit Polynomial(VarTablePtr vars);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  Polynomial(VarTablePtr vars, std::vector<Term> terms);

  static Polynomial constant(VarTablePtr vars, const Rational& c);
  static Polynomial variable(VarTablePtr vars, std::string_view name);
  static Polynomial monomial(VarTablePtr vars, Monomial m, const Rational& c = 1);

  const VarTablePtr& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::uint64_t total_degree() const noexcept;
  /// Highest power of variable `index` appearing in any term.
  std::uint32_t degree_in(std::size_t index) const noexcept;
  bool uses_variable(std::size_t index) const noexcept;
  Rational coefficient(const Monomial& m) const;

  /// Maximal term under `order`. Throws std::domain_error on the zero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator*(const Rational& c) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Same value expressed over another table; every used variable must exist there.
  Polynomial rebase(const VarTablePtr& target) const;

  bool operator==(const Polynomial& other) const;

 private:
  void normalize();

  VarTablePtr vars_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& base, unsigned exponent);

Polynomial differentiate(const Polynomial& p, std::string_view var);
Polynomial differentiate(const Polynomial& p, std::size_t var_index);

/// Exact value at a point given by name. Throws InputError if a variable used
/// by `p` is missing from `point`.
Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point);
/// Exact value at a point given positionally over p.vars().
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Polynomial over the same table with every variable in `values` replaced by
/// the given polynomial (which must share the table).
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& values);

/// Compiled floating-point evaluator for the numerical modules.
class FloatPolynomial {
 public:
  FloatPolynomial() = default;
  explicit FloatPolynomial(const Polynomial& p);

  double operator()(std::span<const double> x) const;
  std::size_t nvars() const noexcept { return nvars_; }

 private:
  struct FloatTerm {
    double coeff;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (var, power)
  };
  std::size_t nvars_ = 0;
  std::vector<FloatTerm> terms_;
};

// Text form. Grammar:
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
//   coeff  := int ('/' uint)?
// Whitespace is insignificant; a single leading sign is accepted.

/// Parses `text`; throws ParseError (with position) or UnknownVariableError.
Polynomial parse(std::string_view text, const VarTablePtr& vars);
/// Canonical text, terms in descending lex order.
std::string format(const Polynomial& p);
std::string format(const Rational& q);

}  // namespace rigidlab
