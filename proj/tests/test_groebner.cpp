#include <algorithm>

#include "doctest.h"
#include "poly_gen.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/groebner.hpp"
#include "rigidlab/varieties.hpp"

using namespace rigidlab;

namespace {

VarTablePtr xy() {
  static VarTablePtr v = make_vars({"x", "y"});
  return v;
}

std::vector<Polynomial> polys(const VarTablePtr& vars, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse(t, vars));
  return out;
}

bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (std::find(b.begin(), b.end(), p) == b.end()) return false;
  return true;
}

struct Case {
  std::vector<std::string> vars;
  std::vector<std::string> gens;
  MonomialOrder order;
};

// small ideals over ≤ 4 variables
std::vector<Case> corpus() {
  auto lex = MonomialOrder::lex();
  auto grevlex = MonomialOrder::grevlex();
  return {
      {{"x", "y"}, {"x^2 + y^2 - 1", "x - y"}, lex},
      {{"x", "y"}, {"x^2 + y^2 - 4", "x*y - 1"}, lex},
      {{"x", "y"}, {"x^2 + y^2 - 4", "x*y - 1"}, grevlex},
      {{"x", "y", "z"}, {"x*y - z", "y*z - x", "z*x - y"}, grevlex},
      {{"x", "y", "z"}, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}, lex},
      {{"t", "x", "y"}, {"x - t^2", "y - t^3"}, MonomialOrder::block_elimination(1, 3)},
      {{"x", "y", "z", "w"}, {"x*w - y*z", "x*z - y^2", "y*w - z^2"}, grevlex},
      {{"x", "y"}, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}, grevlex},
      {{"x", "y"}, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}, lex},
      {{"a", "b", "c"}, {"a^2 - b", "b^2 - c", "c^2 - a"}, grevlex},
      {{"x", "y", "z"}, {"x^2 - y", "x^3 - z"}, lex},
      {{"x", "y"}, {"x", "x + 1"}, lex},
  };
}

}  // namespace

TEST_CASE("normal_form examples") {
  auto lex = MonomialOrder::lex();
  auto basis = polys(xy(), {"x - y"});
  CHECK(normal_form(parse("x^2 - y^2", xy()), basis, lex).is_zero());
  CHECK(normal_form(parse("x^2 + y^2 - 1", xy()), basis, lex) == parse("2*y^2 - 1", xy()));
  CHECK(normal_form(parse("y", xy()), polys(xy(), {"x"}), lex) == parse("y", xy()));
}

TEST_CASE("normal_form uses the first divisor in list order") {
  auto lex = MonomialOrder::lex();
  // both x - 1 and x - y divide the leading x; the first one wins
  CHECK(normal_form(parse("x", xy()), polys(xy(), {"x - 1", "x - y"}), lex) == parse("1", xy()));
  CHECK(normal_form(parse("x", xy()), polys(xy(), {"x - y", "x - 1"}), lex) == parse("y", xy()));
}

TEST_CASE("buchberger examples") {
  auto lex = MonomialOrder::lex();
  // S(x²+y²−1, x−y) = x²+y²−1 − x(x−y) = xy + y² − 1 → 2y² − 1 → monic y² − 1/2
  IdealBasis g = buchberger(polys(xy(), {"x^2 + y^2 - 1", "x - y"}), lex);
  CHECK(g.reduced);
  CHECK(same_set(g.generators, polys(xy(), {"x - y", "y^2 - 1/2"})));
  // ascending leading monomials under lex: y² < x
  CHECK(g.generators.front() == parse("y^2 - 1/2", xy()));

  CHECK(buchberger(polys(xy(), {"x - y"}), lex).generators == polys(xy(), {"x - y"}));
  IdealBasis unit = buchberger(polys(xy(), {"x", "x + 1"}), lex);
  CHECK(unit.is_unit());
  CHECK(unit.generators == polys(xy(), {"1"}));
}

TEST_CASE("buchberger makes generators monic and ignores zero input") {
  IdealBasis g = buchberger(polys(xy(), {"0", "3*x - 6*y"}), MonomialOrder::grevlex());
  CHECK(g.generators == polys(xy(), {"x - 2*y"}));
}

TEST_CASE("coprime criterion skips pairs") {
  IdealBasis g = buchberger(polys(xy(), {"x^2 - 1", "y^3 - 2"}), MonomialOrder::grevlex());
  CHECK(g.stats.pairs_skipped_coprime == 1);
  CHECK(g.stats.pairs_reduced == 0);
  CHECK(g.generators.size() == 2);
}

TEST_CASE("ideal_membership examples") {
  auto lex = MonomialOrder::lex();
  CHECK(ideal_membership(parse("x^2 - y^2", xy()), polys(xy(), {"x - y"}), lex));
  CHECK_FALSE(ideal_membership(parse("x + 1", xy()), polys(xy(), {"x - y"}), lex));
}

TEST_CASE("eliminate examples") {
  auto vars = make_vars({"t", "x", "y"});
  IdealBasis e = eliminate(polys(vars, {"x - t", "y - t^2"}), {"t"});
  // substituting t = x gives the parabola
  CHECK(std::find(e.generators.begin(), e.generators.end(), parse("x^2 - y", vars)) != e.generators.end());
  for (const auto& g : e.generators) CHECK_FALSE(g.uses_variable(0));

  IdealBasis f = eliminate(polys(xy(), {"x - 1"}), {"y"});
  CHECK(f.generators == polys(xy(), {"x - 1"}));
  CHECK_THROWS_AS(eliminate(polys(xy(), {"x - 1"}), {"q"}), UnknownVariableError);
}

TEST_CASE("property: corpus bases contain the ideal and are closed under S-pairs") {
  for (const auto& c : corpus()) {
    auto vars = make_vars(c.vars);
    std::vector<Polynomial> gens;
    for (const auto& t : c.gens) gens.push_back(parse(t, vars));
    IdealBasis g = buchberger(gens, c.order);
    CAPTURE(c.gens.front());
    for (const auto& f : gens) CHECK(normal_form(f, g).is_zero());
    CHECK(all_s_polynomials_reduce(g));
    // idempotent
    CHECK(buchberger(g.generators, c.order).generators == g.generators);
    // reduced: monic, no leading monomial divides a monomial of another generator
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      CHECK(g.generators[i].leading_term(c.order).coeff == 1);
      for (std::size_t j = 0; j < g.generators.size(); ++j) {
        if (i == j) continue;
        const Monomial& lm = g.generators[i].leading_term(c.order).mono;
        for (const auto& t : g.generators[j].terms()) CHECK_FALSE(lm.divides(t.mono));
      }
    }
  }
}

TEST_CASE("property: elimination output never mentions dropped variables") {
  auto vars = make_vars({"a", "b", "x", "y"});
  SplitMix64 rng(3);
  for (int i = 0; i < 10; ++i) {
    std::vector<Polynomial> gens{parse("a - x - 1", vars), parse("b - a*y", vars),
                                 rigidlab::testing::random_poly(rng, vars, 3, 1)};
    IdealBasis e = eliminate(gens, {"a", "b"});
    for (const auto& g : e.generators) {
      CHECK_FALSE(g.uses_variable(0));
      CHECK_FALSE(g.uses_variable(1));
    }
  }
}

TEST_CASE("property: principal membership agrees with vanishing on the variety") {
  // g = x − q(y, z): every (q(y,z), y, z) is a root, so members of <g> vanish there
  auto vars = make_vars({"x", "y", "z"});
  SplitMix64 rng(77);
  auto lex = MonomialOrder::lex();
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial q = rigidlab::testing::random_poly(rng, make_vars({"y", "z"}), 4, 2).rebase(vars);
    Polynomial g = parse("x", vars) - q;
    Polynomial h = rigidlab::testing::random_poly(rng, vars, 4, 2);
    Polynomial member = g * h;
    Polynomial outsider = member + rigidlab::testing::random_poly(rng, make_vars({"y", "z"}), 3, 2).rebase(vars) +
                          Polynomial::constant(vars, 1);
    const bool in1 = ideal_membership(member, std::vector<Polynomial>{g}, lex);
    const bool in2 = ideal_membership(outsider, std::vector<Polynomial>{g}, lex);
    bool vanish1 = true, vanish2 = true;
    for (int k = 0; k < 100; ++k) {
      Rational y(rigidlab::testing::uniform_int(rng, -20, 20), rigidlab::testing::uniform_int(rng, 1, 7));
      Rational z(rigidlab::testing::uniform_int(rng, -20, 20), rigidlab::testing::uniform_int(rng, 1, 7));
      std::vector<Rational> pt{evaluate(q, std::vector<Rational>{0, y, z}), y, z};
      REQUIRE(evaluate(g, pt) == 0);
      vanish1 = vanish1 && evaluate(member, pt) == 0;
      vanish2 = vanish2 && evaluate(outsider, pt) == 0;
    }
    CHECK(in1);
    CHECK(vanish1);
    CHECK(in2 == vanish2);
  }
}

TEST_CASE("shared-neighbour elimination is independent of the pair tie-break") {
  ConstraintSystem sys = shared_neighbor_system();
  std::vector<bool> mask{false, false, false, true, true};
  MonomialOrder order = MonomialOrder::block_elimination(mask);
  IdealBasis a = buchberger(sys.equations, order, BuchbergerOptions{{}, PairTieBreak::ascending_index});
  IdealBasis b = buchberger(sys.equations, order, BuchbergerOptions{{}, PairTieBreak::descending_index});
  CHECK(a.generators == b.generators);
}

TEST_CASE("resource limits fail loudly") {
  auto vars = make_vars({"x", "y", "z"});
  auto gens = polys(vars, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"});
  CHECK_THROWS_AS(buchberger(gens, MonomialOrder::lex(), BuchbergerOptions{GroebnerLimits{1, 5000}}),
                  ResourceLimitError);
  CHECK_THROWS_AS(buchberger(gens, MonomialOrder::lex(), BuchbergerOptions{GroebnerLimits{100000, 3}}),
                  ResourceLimitError);
  CHECK_THROWS_AS(ideal_membership(gens[0], gens, MonomialOrder::lex(), GroebnerLimits{1, 5000}),
                  ResourceLimitError);
}

TEST_CASE("limit string parsing") {
  GroebnerLimits l = GroebnerLimits::parse("pairs=10,basis=5");
  CHECK(l.max_pairs == 10);
  CHECK(l.max_basis == 5);
  CHECK(GroebnerLimits::parse("basis=7").max_pairs == 100000);
  CHECK_THROWS_AS(GroebnerLimits::parse("pairs"), InputError);
  CHECK_THROWS_AS(GroebnerLimits::parse("pairs=x"), InputError);
  CHECK_THROWS_AS(GroebnerLimits::parse("depth=3"), InputError);
}
