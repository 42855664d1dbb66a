#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "rigidlab/numeric.hpp"
#include "rigidlab/rng.hpp"

using namespace rigidlab;

namespace {

ConstraintSystem unit_system(const std::string& name) {
  Graph g = builtin_graph(name);
  return build_unit_system(g, default_pinning(g));
}

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

TEST_CASE("newton solves the triangle from random starts") {
  ConstraintSystem sys = unit_system("triangle");
  int converged = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    SolveResult r = newton_solve(sys, random_start(sys.variable_count(), 7, i));
    if (!r.converged) continue;
    ++converged;
    CHECK(r.residual < 1e-10);
    const auto& p = r.config.points();
    CHECK(dist(p[0], p[1]) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(dist(p[0], p[2]) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(dist(p[1], p[2]) == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(converged >= 15);
}

TEST_CASE("newton rejects a seed of the wrong length") {
  ConstraintSystem sys = unit_system("triangle");
  std::vector<double> seed{1.0};
  CHECK_THROWS(newton_solve(sys, seed));
}

TEST_CASE("property: jacobian matches central differences") {
  ConstraintSystem sys = unit_system("k33");
  CompiledSystem cs(sys);
  for (std::uint64_t t = 0; t < 10; ++t) {
    std::vector<double> x = random_start(sys.variable_count(), 3, t);
    Eigen::MatrixXd j = cs.jacobian(x);
    const double h = 1e-6;
    for (std::size_t v = 0; v < x.size(); ++v) {
      std::vector<double> up = x, down = x;
      up[v] += h;
      down[v] -= h;
      Eigen::VectorXd fd = (cs.residual(up) - cs.residual(down)) / (2 * h);
      CHECK((fd - j.col(static_cast<Eigen::Index>(v))).norm() < 1e-6);
    }
  }
}

TEST_CASE("property: an exact solution is a fixed point") {
  Graph moser = builtin_graph("moser");
  ConstraintSystem sys = build_unit_system(moser, default_pinning(moser));
  std::vector<double> x = sys.values_from(pin_configuration(moser_spindle_realization(), sys.pinning));
  SolveResult r = newton_solve(sys, x);
  CHECK(r.converged);
  CHECK(r.iterations <= 1);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(r.values[i] - x[i]) < 1e-12);
}

TEST_CASE("local dimension examples") {
  ConstraintSystem tri = unit_system("triangle");
  SolveResult a = newton_solve(tri, random_start(tri.variable_count(), 1, 0));
  REQUIRE(a.converged);
  CHECK(local_dimension(tri, a) == 0);

  ConstraintSystem edge = unit_system("edge");
  std::vector<double> e{0.3};
  SolveResult b = newton_solve(edge, e);
  REQUIRE(b.converged);
  CHECK(local_dimension(edge, b) == 0);

  // a rhombus near the square flexes
  ConstraintSystem c4 = unit_system("c4");
  std::vector<double> seed = c4.values_from(pin_configuration(
      [] {
        Configuration c;
        c.set("u1", {0, 0});
        c.set("u2", {1.02, 0});
        c.set("u3", {1.3, 0.97});
        c.set("u4", {0.25, 0.98});
        return c;
      }(),
      c4.pinning));
  SolveResult s = newton_solve(c4, seed);
  REQUIRE(s.converged);
  CHECK(local_dimension(c4, s) == 1);

  SolveResult bad;
  CHECK_THROWS_AS(local_dimension(tri, bad), std::logic_error);
}

TEST_CASE("moser spindle is locally rigid") {
  Graph moser = builtin_graph("moser");
  ConstraintSystem sys = build_unit_system(moser, default_pinning(moser));
  std::vector<double> x = sys.values_from(pin_configuration(moser_spindle_realization(), sys.pinning));
  SplitMix64 rng(4);
  for (auto& v : x) v += rng.uniform(-1e-3, 1e-3);
  SolveResult r = newton_solve(sys, x);
  REQUIRE(r.converged);
  CHECK(local_dimension(sys, r) == 0);
}

TEST_CASE("property: local dimension ignores vertex labels") {
  // C4 listed in another order with a different pinned pair
  Graph g({"d", "b", "a", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  ConstraintSystem sys = build_unit_system(g, Pinning{"a", "b"});
  Configuration c;
  c.set("a", {0, 0});
  c.set("b", {1.02, 0});
  c.set("c", {1.3, 0.97});
  c.set("d", {0.25, 0.98});
  SolveResult s = newton_solve(sys, sys.values_from(pin_configuration(c, sys.pinning)));
  REQUIRE(s.converged);
  CHECK(local_dimension(sys, s) == 1);
}

TEST_CASE("random starts are reproducible streams") {
  CHECK(random_start(5, 9, 3) == random_start(5, 9, 3));
  CHECK(random_start(5, 9, 3) != random_start(5, 9, 4));
  for (double v : random_start(50, 1, 1)) {
    CHECK(v >= -2.0);
    CHECK(v < 2.0);
  }
}

TEST_CASE("collinearity measure") {
  CHECK(collinearity_measure({0, 0}, {1, 0}, {2, 0}) == 0.0);
  CHECK(collinearity_measure({0, 0}, {1, 0}, {0, 1}) == 1.0);
  CHECK(collinearity_measure({0, 0}, {10, 0}, {0, 1}) == 10.0);
  std::array<Point2, 3> pts{Point2{0, 0}, Point2{0, 1}, Point2{1, 0}};
  CHECK(collinearity_measure(pts) == 1.0);
}

TEST_CASE("collapse experiment on K33") {
  CollapseReport r = collapse_experiment(collapse_target("k33"), 300, 1);
  CHECK(r.converged > 0);
  CHECK(r.distinct_nondegenerate_count == 0);
  CHECK(r.coincident_neighbor_count + r.collinear_only_count + r.distinct_nondegenerate_count == r.converged);
  int hist = 0;
  for (auto [dim, n] : r.local_dimension_histogram) hist += n;
  CHECK(hist == r.converged);
  nlohmann::json j = to_json(r);
  CHECK(j["converged"] == r.converged);
}

TEST_CASE("collapse experiment on the triangle control") {
  CollapseReport r = collapse_experiment(collapse_target("triangle"), 50, 2);
  CHECK(r.converged > 0);
  CHECK(r.distinct_nondegenerate_count == r.converged);
  CHECK_THROWS(collapse_target("petersen"));
}

TEST_CASE("collapse experiment is reproducible") {
  CollapseReport a = collapse_experiment(collapse_target("k44"), 100, 5);
  CollapseReport b = collapse_experiment(collapse_target("k44"), 100, 5);
  CHECK(to_json(a) == to_json(b));
  CHECK(a.distinct_nondegenerate_count == 0);
}

TEST_CASE("flatness curve samples") {
  for (double x2 : {1.0, 0.5, -1.3, 1.9}) {
    auto pts = sample_flatness_curve(x2, 41);
    CHECK_FALSE(pts.empty());
    for (auto p : pts) {
      std::vector<double> at{x2, p.x, p.y};
      CHECK(std::abs(FloatPolynomial(flatness_eq1().poly)(at)) < 1e-8);
      CHECK(p.y >= 0.0);
      CHECK(p.y <= 3.0);
    }
  }
  auto pts = sample_flatness_curve(1.0, 5);
  CHECK(std::find(pts.begin(), pts.end(), Point2{1.0, 0.0}) != pts.end());
  CHECK(std::find(pts.begin(), pts.end(), Point2{0.0, 0.0}) != pts.end());
  CHECK_THROWS_AS(sample_flatness_curve(2.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(sample_flatness_curve(0.0, 10), std::invalid_argument);
}
