#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rigidlab {

/// Exponent vector over a VarTable. Length always equals the table size.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept;
  bool is_one() const noexcept;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept;
  /// True iff the two monomials share no variable.
  bool coprime(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;
  /// Plain lexicographic comparison of exponent vectors; used for containers only.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Term order on monomials. All three kinds are multiplicative well-orders.
///
/// Block elimination compares grevlex on the eliminated variables first and
/// breaks ties by grevlex on the remaining variables, so any polynomial whose
/// leading monomial is free of eliminated variables lies entirely in the
/// subring of kept variables.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block_elimination };

  static MonomialOrder lex();
  static MonomialOrder grevlex();
  /// The first `k` variables of an `nvars`-table form the eliminated block.
  static MonomialOrder block_elimination(std::size_t k, std::size_t nvars);
  /// Arbitrary eliminated set given as a mask over the variable table.
  static MonomialOrder block_elimination(std::vector<bool> eliminated);

  Kind kind() const noexcept { return kind_; }
  const std::vector<bool>& eliminated() const noexcept { return eliminated_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string describe() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<bool> eliminated_;
};

int compare_lex(const Monomial& a, const Monomial& b);
int compare_grevlex(const Monomial& a, const Monomial& b);

}  // namespace rigidlab
