#include <algorithm>
#include <cctype>
#include <limits>
#include <string>

#include "rigidlab/errors.hpp"
#include "rigidlab/polynomial.hpp"

namespace rigidlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarTablePtr& vars) : text_(text), vars_(vars) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1 : 1;
    }
    terms.push_back(term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      take();
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return Polynomial(vars_, std::move(terms));
  }

 private:
  Term term(int sign) {
    skip_ws();
    Term t{Monomial(vars_->size()), Rational(sign)};
    if (at_end()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff *= coeff();
    } else {
      factor(t.mono);
    }
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      take();
      skip_ws();
      factor(t.mono);
    }
    return t;
  }

  Rational coeff() {
    mpz_class num(digits(), 10);
    skip_ws();
    if (!at_end() && peek() == '/') {
      take();
      skip_ws();
      std::size_t at = pos_;
      mpz_class den(digits(), 10);
      if (den == 0) throw ParseError("zero denominator", at);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  void factor(Monomial& mono) {
    std::size_t start = pos_;
    if (at_end() || peek() < 'a' || peek() > 'z') fail("expected a variable");
    while (!at_end() && (std::islower(static_cast<unsigned char>(peek())) ||
                         std::isdigit(static_cast<unsigned char>(peek()))))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto idx = vars_->index_of(name);
    if (!idx) throw UnknownVariableError(name);
    std::uint64_t power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      take();
      skip_ws();
      std::size_t at = pos_;
      std::string d = digits();
      if (d.size() > 9) throw ParseError("exponent too large", at);
      power = std::stoull(d);
    }
    std::uint64_t total = mono[*idx] + power;
    if (total > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
    mono[*idx] = static_cast<std::uint32_t>(total);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(at_end() ? msg + ", found end of input" : msg + ", found '" + text_[pos_] + "'", pos_);
  }

  std::string_view text_;
  const VarTablePtr& vars_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, const VarTable& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

Polynomial parse(std::string_view text, const VarTablePtr& vars) { return Parser(text, vars).run(); }

std::string format(const Rational& q) { return q.get_str(); }

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const Term* a, const Term* b) { return compare_lex(a->mono, b->mono) > 0; });

  std::string out;
  bool first = true;
  for (const Term* t : order) {
    bool negative = sgn(t->coeff) < 0;
    Rational mag = abs(t->coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(t->mono, *p.vars());
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

}  // namespace rigidlab
