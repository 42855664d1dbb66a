#include "rigidlab/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace rigidlab {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(size() == other.size());
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(other.divides(*this));
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

int compare_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int compare_grevlex(const Monomial& a, const Monomial& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    // smaller exponent in the last differing variable wins
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

// grevlex restricted to the variables where mask[i] == want
int compare_grevlex_masked(const Monomial& a, const Monomial& b, const std::vector<bool>& mask,
                           bool want) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask[i] == want) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (mask[i] == want && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::lex); }

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(Kind::grevlex); }

MonomialOrder MonomialOrder::block_elimination(std::size_t k, std::size_t nvars) {
  if (k > nvars) throw std::invalid_argument("elimination block larger than variable table");
  std::vector<bool> mask(nvars, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  return block_elimination(std::move(mask));
}

MonomialOrder MonomialOrder::block_elimination(std::vector<bool> eliminated) {
  MonomialOrder o(Kind::block_elimination);
  o.eliminated_ = std::move(eliminated);
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      return compare_lex(a, b);
    case Kind::grevlex:
      return compare_grevlex(a, b);
    case Kind::block_elimination: {
      if (eliminated_.size() != a.size())
        throw std::invalid_argument("elimination mask does not match variable count");
      if (int c = compare_grevlex_masked(a, b, eliminated_, true); c != 0) return c;
      return compare_grevlex_masked(a, b, eliminated_, false);
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::block_elimination: {
      std::string s = "block-elimination(";
      bool first = true;
      for (std::size_t i = 0; i < eliminated_.size(); ++i) {
        if (!eliminated_[i]) continue;
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
      }
      return s + ")";
    }
  }
  return {};
}

}  // namespace rigidlab
