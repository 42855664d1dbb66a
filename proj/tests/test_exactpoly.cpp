#include "doctest.h"
#include "poly_gen.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/polynomial.hpp"

using namespace rigidlab;
using rigidlab::testing::random_monomial;
using rigidlab::testing::random_poly;

namespace {

const char* kEq1 =
    "x2*x3^4 + 2*x2*x3^2*y3^2 + x2*y3^4 - 2*x2^2*x3^3 - 2*x2^2*x3*y3^2 + x2^3*x3^2 + x2^3*y3^2 - 4*x2*y3^2";

VarTablePtr xyz() {
  static VarTablePtr v = make_vars({"x", "y", "z"});
  return v;
}

VarTablePtr flat_vars() {
  static VarTablePtr v = make_vars({"x2", "x3", "y3"});
  return v;
}

Polynomial P(const char* text, const VarTablePtr& vars = xyz()) { return parse(text, vars); }

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(std::vector<std::uint32_t>(e)); }

}  // namespace

TEST_CASE("var table validates names") {
  CHECK_NOTHROW(VarTable({"x2", "vx", "r1to2"}));
  CHECK_THROWS_AS(VarTable({"X"}), InputError);
  CHECK_THROWS_AS(VarTable({"2x"}), InputError);
  CHECK_THROWS_AS(VarTable({"x_1"}), InputError);
  CHECK_THROWS_AS(VarTable({"x", "x"}), InputError);
  VarTable t({"a", "b"});
  CHECK(t.index_of("b") == 1u);
  CHECK_FALSE(t.index_of("c"));
  CHECK_THROWS_AS(t.require("c"), UnknownVariableError);
}

TEST_CASE("parse reads terms directly") {
  auto vars = make_vars({"x2", "y3"});
  Polynomial p = parse("x2*y3^2 - 4*y3^2", vars);
  REQUIRE(p.term_count() == 2);
  CHECK(p.coefficient(mono({1, 2})) == 1);
  CHECK(p.coefficient(mono({0, 2})) == -4);

  CHECK(parse("0", vars).is_zero());
  CHECK(parse("  3 /  6 * x2 ", vars).coefficient(mono({1, 0})) == Rational(1, 2));
  CHECK(parse("-x2 + x2", vars).is_zero());
  CHECK(parse("x2*x2*y3", vars) == parse("x2^2*y3", vars));
}

TEST_CASE("parse of the flatness polynomial") {
  Polynomial p = parse(kEq1, flat_vars());
  CHECK(p.term_count() == 8);
  CHECK(p.total_degree() == 5);
  for (const auto& t : p.terms()) CHECK(t.mono[0] >= 1);  // every term carries x2
}

TEST_CASE("parse errors carry a position") {
  auto vars = xyz();
  try {
    parse("x + * y", vars);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse("x^", vars), ParseError);
  CHECK_THROWS_AS(parse("", vars), ParseError);
  CHECK_THROWS_AS(parse("x y", vars), ParseError);
  CHECK_THROWS_AS(parse("1/0", vars), ParseError);
  CHECK_THROWS_AS(parse("x + w", vars), UnknownVariableError);
  CHECK_THROWS_AS(parse("X", vars), ParseError);
}

TEST_CASE("format is descending lex") {
  CHECK(format(P("y^2 + x - 1")) == "x + y^2 - 1");
  CHECK(format(P("-x*y + 1/2*z")) == "-x*y + 1/2*z");
  CHECK(format(P("0")) == "0");
  CHECK(format(P("-3/4")) == "-3/4");
}

TEST_CASE("add") {
  CHECK(P("x + y") + P("x - y") == P("2*x"));
  Polynomial p = P("x^2*y - 3*z + 7");
  CHECK(p + P("0") == p);
  CHECK((P("x^2 - 1") + P("1 - x^2")).is_zero());
  CHECK_THROWS_AS(P("x") + parse("x", make_vars({"x"})) + P("y"), std::invalid_argument);
}

TEST_CASE("mul") {
  CHECK(P("x - y") * P("x + y") == P("x^2 - y^2"));
  Polynomial p = P("x^2*y - 3*z + 7");
  CHECK(p * P("1") == p);
  // hand expansion of (x3² − x2·x3 + y3²)²
  Polynomial inner = parse("x3^2 - x2*x3 + y3^2", flat_vars());
  Polynomial sq = inner * inner;
  CHECK(sq.term_count() == 6);
  CHECK(sq == parse("x3^4 + x2^2*x3^2 + y3^4 - 2*x2*x3^3 + 2*x3^2*y3^2 - 2*x2*x3*y3^2", flat_vars()));
  CHECK(pow(inner, 2) == sq);
}

TEST_CASE("leading_term") {
  auto vars = make_vars({"x", "y"});
  Polynomial p = parse("x + y^2", vars);
  CHECK(p.leading_term(MonomialOrder::lex()).mono == mono({1, 0}));
  CHECK(p.leading_term(MonomialOrder::grevlex()).mono == mono({0, 2}));

  Polynomial eq1 = parse(kEq1, flat_vars());
  const Term& lt = eq1.leading_term(MonomialOrder::lex());
  CHECK(lt.mono == mono({3, 2, 0}));
  CHECK(lt.coeff == 1);
  CHECK_THROWS_AS(Polynomial(vars).leading_term(MonomialOrder::lex()), std::domain_error);
}

TEST_CASE("differentiate") {
  auto vars = flat_vars();
  CHECK(differentiate(parse("y3^2 - 1", vars), "y3") == parse("2*y3", vars));
  CHECK(differentiate(parse("5", vars), "x2").is_zero());
  // termwise oracle: only 5 of the 8 terms contain y3
  Polynomial d = differentiate(parse(kEq1, vars), "y3");
  CHECK(d.term_count() == 5);
  CHECK(d == parse("4*x2*x3^2*y3 + 4*x2*y3^3 - 4*x2^2*x3*y3 + 2*x2^3*y3 - 8*x2*y3", vars));
  CHECK_THROWS_AS(differentiate(parse("y3", vars), "q"), UnknownVariableError);
}

TEST_CASE("evaluate") {
  auto vars = make_vars({"x", "y"});
  CHECK(evaluate(parse("x^2 + y^2", vars), {{"x", Rational(3, 5)}, {"y", Rational(4, 5)}}) == 1);
  CHECK(evaluate(parse("x^3*y - 7/3", vars), {{"x", 0}, {"y", 0}}) == Rational(-7, 3));
  CHECK(evaluate(parse(kEq1, flat_vars()), {{"x2", 2}, {"x3", 1}, {"y3", 0}}) == 2);
  CHECK_THROWS_AS(evaluate(parse("x*y", vars), {{"x", 1}}), InputError);
  // unused variables need no value
  CHECK(evaluate(parse("x + 1", vars), {{"x", 1}}) == 2);
}

TEST_CASE("substitute and rebase") {
  auto vars = xyz();
  CHECK(substitute(P("x^2 + y"), {{0, P("y + 1")}}) == P("y^2 + 3*y + 1"));
  auto wide = make_vars({"a", "x", "y", "z"});
  CHECK(format(P("x*z - y").rebase(wide)) == "x*z - y");
  CHECK_THROWS_AS(parse("a", wide).rebase(xyz()), UnknownVariableError);
}

TEST_CASE("float evaluation matches exact evaluation") {
  SplitMix64 rng(11);
  auto vars = xyz();
  for (int i = 0; i < 50; ++i) {
    Polynomial p = random_poly(rng, vars);
    std::vector<Rational> q{Rational(rigidlab::testing::uniform_int(rng, -5, 5), 4),
                            Rational(rigidlab::testing::uniform_int(rng, -5, 5), 2), Rational(1, 8)};
    std::vector<double> f{q[0].get_d(), q[1].get_d(), q[2].get_d()};
    CHECK(FloatPolynomial(p)(f) == doctest::Approx(evaluate(p, q).get_d()).epsilon(1e-12));
  }
}

TEST_CASE("property: ring axioms on random polynomials") {
  SplitMix64 rng(2024);
  auto vars = make_vars({"a", "b", "c", "d", "e", "f"});
  for (int i = 0; i < 60; ++i) {
    Polynomial a = random_poly(rng, vars, 8, 2), b = random_poly(rng, vars, 8, 2), c = random_poly(rng, vars, 8, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("property: parse(format(p)) == p") {
  SplitMix64 rng(7);
  auto vars = make_vars({"x1", "x2", "vy", "q"});
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(rng, vars) * Rational(1, rigidlab::testing::uniform_int(rng, 1, 6));
    Polynomial back = parse(format(p), vars);
    CHECK(back == p);
    CHECK(format(back) == format(p));
  }
}

TEST_CASE("property: grevlex leading term has maximal total degree") {
  SplitMix64 rng(99);
  auto vars = xyz();
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(rng, vars);
    if (p.is_zero()) continue;
    CHECK(p.leading_term(MonomialOrder::grevlex()).mono.total_degree() == p.total_degree());
  }
}

TEST_CASE("property: monomial orders are multiplicative well-orders") {
  SplitMix64 rng(5);
  const std::size_t n = 4;
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(),
                                    MonomialOrder::block_elimination(2, n),
                                    MonomialOrder::block_elimination(std::vector<bool>{false, true, false, true})};
  for (const auto& ord : orders) {
    for (int i = 0; i < 200; ++i) {
      Monomial u = random_monomial(rng, n), v = random_monomial(rng, n), w = random_monomial(rng, n);
      int c = ord.compare(u, v);
      CHECK(c == -ord.compare(v, u));
      CHECK(ord.compare(u * w, v * w) == c);
      CHECK(ord.compare(Monomial(n), u) <= 0);
      CHECK((c == 0) == (u == v));
    }
  }
}

TEST_CASE("block elimination ranks any eliminated variable above kept ones") {
  // x eliminated: x beats y^10 z^10
  MonomialOrder ord = MonomialOrder::block_elimination(1, 3);
  CHECK(ord.compare(mono({1, 0, 0}), mono({0, 10, 10})) > 0);
  // within the kept block it is grevlex
  CHECK(ord.compare(mono({0, 0, 2}), mono({0, 1, 0})) > 0);
  CHECK(ord.compare(mono({0, 1, 1}), mono({0, 0, 2})) > 0);
}

TEST_CASE("property: differentiate is linear and obeys the product rule") {
  SplitMix64 rng(31337);
  auto vars = xyz();
  for (int i = 0; i < 50; ++i) {
    Polynomial a = random_poly(rng, vars), b = random_poly(rng, vars);
    Rational k(rigidlab::testing::uniform_int(rng, -9, 9), 7);
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK(differentiate(a * k + b, v) == differentiate(a, v) * k + differentiate(b, v));
      CHECK(differentiate(a * b, v) == differentiate(a, v) * b + a * differentiate(b, v));
    }
  }
}
