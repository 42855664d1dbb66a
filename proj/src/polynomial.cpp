#include "rigidlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rigidlab/errors.hpp"

namespace rigidlab {

namespace {

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_grevlex(a, b) > 0; }
};

void require_same(const Polynomial& a, const Polynomial& b) {
  if (!same_vars(a.vars(), b.vars())) throw std::invalid_argument("polynomials over different variable tables");
}

// a + sign * b on already-canonical term lists
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : compare_grevlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("polynomial requires a variable table");
}

Polynomial::Polynomial(VarTablePtr vars, std::vector<Term> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  if (!vars_) throw std::invalid_argument("polynomial requires a variable table");
  for (const auto& t : terms_)
    if (t.mono.size() != vars_->size()) throw std::invalid_argument("monomial length does not match variable table");
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return compare_grevlex(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(VarTablePtr vars, const Rational& c) {
  Polynomial p(vars);
  if (c != 0) p.terms_.push_back(Term{Monomial(p.vars_->size()), c});
  return p;
}

Polynomial Polynomial::variable(VarTablePtr vars, std::string_view name) {
  std::size_t idx = vars->require(name);
  auto n = vars->size();
  return monomial(std::move(vars), Monomial::variable(n, idx), 1);
}

Polynomial Polynomial::monomial(VarTablePtr vars, Monomial m, const Rational& c) {
  Polynomial p(vars);
  if (m.size() != p.vars_->size()) throw std::invalid_argument("monomial length does not match variable table");
  if (c != 0) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

std::uint64_t Polynomial::total_degree() const noexcept {
  // grevlex sorts by total degree first
  return terms_.empty() ? 0 : terms_.front().mono.total_degree();
}

std::uint32_t Polynomial::degree_in(std::size_t index) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[index]);
  return d;
}

bool Polynomial::uses_variable(std::size_t index) const noexcept { return degree_in(index) > 0; }

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(vars_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  Polynomial r(a.vars_);
  r.terms_ = merge(a.terms_, b.terms_, +1);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  Polynomial r(a.vars_);
  r.terms_ = merge(a.terms_, b.terms_, -1);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono, ta.coeff * tb.coeff);
      if (!inserted) it->second += ta.coeff * tb.coeff;
    }
  }
  Polynomial r(a.vars_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back(Term{m, c});
  return r;
}

Polynomial Polynomial::rebase(const VarTablePtr& target) const {
  std::vector<std::size_t> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (auto j = target->index_of(vars_->name(i))) {
      map[i] = *j;
    } else {
      map[i] = target->size();  // only fatal if used
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] == target->size()) throw UnknownVariableError(vars_->name(i));
      m[map[i]] = t.mono[i];
    }
    out.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_vars(vars_, other.vars_) && terms_ == other.terms_;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(base.vars(), 1);
  Polynomial sq = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * sq;
    exponent >>= 1;
    if (exponent > 0) sq = sq * sq;
  }
  return result;
}

Polynomial differentiate(const Polynomial& p, std::string_view var) {
  return differentiate(p, p.vars()->require(var));
}

Polynomial differentiate(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.vars()->size()) throw std::out_of_range("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    auto e = t.mono[var_index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m[var_index] = e - 1;
    out.push_back(Term{std::move(m), t.coeff * e});
  }
  return Polynomial(p.vars(), std::move(out));
}

namespace {

Rational power(const Rational& base, std::uint32_t e) {
  Rational r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.vars()->size()) throw std::invalid_argument("point dimension does not match variable table");
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) v *= power(point[i], t.mono[i]);
    sum += v;
  }
  return sum;
}

Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point) {
  const auto& vars = *p.vars();
  std::vector<Rational> values(vars.size(), Rational(0));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars.name(i));
    if (it != point.end()) {
      values[i] = it->second;
    } else if (p.uses_variable(i)) {
      throw InputError("no value given for variable '" + vars.name(i) + "'");
    }
  }
  return evaluate(p, std::span<const Rational>(values));
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& values) {
  for (const auto& [i, v] : values) {
    if (!same_vars(v.vars(), p.vars())) throw std::invalid_argument("substitution over a different variable table");
    (void)i;
  }
  Polynomial result(p.vars());
  for (const auto& t : p.terms()) {
    Monomial kept = t.mono;
    Polynomial factor = Polynomial::constant(p.vars(), t.coeff);
    for (const auto& [i, v] : values) {
      if (kept[i] == 0) continue;
      factor = factor * pow(v, kept[i]);
      kept[i] = 0;
    }
    result = result + factor * Polynomial::monomial(p.vars(), kept);
  }
  return result;
}

FloatPolynomial::FloatPolynomial(const Polynomial& p) : nvars_(p.vars()->size()) {
  terms_.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    FloatTerm ft{t.coeff.get_d(), {}};
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) ft.factors.emplace_back(static_cast<std::uint32_t>(i), t.mono[i]);
    terms_.push_back(std::move(ft));
  }
}

double FloatPolynomial::operator()(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (auto [var, e] : t.factors) {
      double b = x[var];
      for (std::uint32_t k = 0; k < e; ++k) v *= b;
    }
    sum += v;
  }
  return sum;
}

}  // namespace rigidlab
