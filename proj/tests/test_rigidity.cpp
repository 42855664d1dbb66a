#include <bit>

#include "doctest.h"
#include "poly_gen.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/rigidity.hpp"

using namespace rigidlab;
using rigidlab::testing::uniform_int;

namespace {

Graph from_mask(std::size_t n, std::uint32_t mask) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("p" + std::to_string(i));
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1u) g.add_edge(i, j);
  return g;
}

// Laman by definition: |E| = 2n − 3 and every induced subgraph on k ≥ 2
// vertices has at most 2k − 3 edges.
bool laman_by_subsets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != 2 * n - 3) return false;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int k = std::popcount(s);
    if (k < 2) continue;
    int inside = 0;
    for (auto [a, b] : g.edges())
      if ((s >> a & 1u) && (s >> b & 1u)) ++inside;
    if (inside > 2 * k - 3) return false;
  }
  return true;
}

// Henneberg type I: add a vertex joined to two existing ones.
Graph random_laman(SplitMix64& rng, std::size_t n) {
  Graph g;
  g.add_vertex("p0");
  g.add_vertex("p1");
  g.add_edge(0, 1);
  for (std::size_t v = 2; v < n; ++v) {
    g.add_vertex("p" + std::to_string(v));
    std::size_t a = uniform_int(rng, 0, static_cast<int>(v) - 1);
    std::size_t b = uniform_int(rng, 0, static_cast<int>(v) - 2);
    if (b >= a) ++b;
    g.add_edge(a, v);
    g.add_edge(b, v);
  }
  return g;
}

}  // namespace

TEST_CASE("laman examples") {
  CHECK(laman_count(builtin_graph("k33")));
  CHECK(laman_full(builtin_graph("k33")));
  CHECK(laman_full(builtin_graph("triangle")));
  CHECK(laman_full(builtin_graph("edge")));
  CHECK_FALSE(laman_count(builtin_graph("c4")));
  CHECK_FALSE(laman_full(builtin_graph("c4")));
  CHECK_FALSE(laman_full(builtin_graph("k44")));
  // K4 plus a pendant path: right count, overbraced K4
  Graph g = from_mask(4, 0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) g.add_edge(i, j);
  g.add_vertex("q");
  g.add_edge(3, 4);
  CHECK(laman_count(g));
  CHECK_FALSE(laman_full(g));
}

TEST_CASE("laman_full refuses oversized graphs") {
  CHECK_THROWS_AS(laman_full(path_graph(kLamanVertexLimit + 1)), ResourceLimitError);
}

TEST_CASE("property: pebble game matches subset enumeration on small graphs") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::uint32_t edges = static_cast<std::uint32_t>(n * (n - 1) / 2);
    int laman = 0;
    for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
      if (std::popcount(mask) != static_cast<int>(2 * n - 3)) continue;
      Graph g = from_mask(n, mask);
      const bool expect = laman_by_subsets(g);
      laman += expect;
      if (laman_full(g) != expect) {
        CAPTURE(n);
        CAPTURE(mask);
        CHECK(laman_full(g) == expect);
      }
    }
    CHECK(laman > 0);
  }
}

TEST_CASE("generic rank and degrees of freedom") {
  CHECK(generic_rank(builtin_graph("triangle")) == 3);
  CHECK(generic_rank(builtin_graph("k33")) == 9);
  CHECK(generic_rank(builtin_graph("c4")) == 4);
  CHECK(dof(builtin_graph("triangle")) == 0);
  CHECK(dof(builtin_graph("k33")) == 0);
  CHECK(dof(builtin_graph("c4")) == 1);
  CHECK(dof(builtin_graph("edge")) == 0);
  CHECK(dof(path_graph(4)) == 2);
  CHECK(dof(builtin_graph("k44")) == 0);
}

TEST_CASE("property: generic rank agrees with the pebble game") {
  SplitMix64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = uniform_int(rng, 2, 8);
    const auto edges = static_cast<std::uint32_t>(n * (n - 1) / 2);
    const std::uint32_t mask = static_cast<std::uint32_t>(rng.next()) & ((1u << edges) - 1);
    Graph g = from_mask(n, mask);
    CHECK(generic_rank(g) == static_cast<int>(pebble_game_independent_edges(g)));
  }
}

TEST_CASE("property: rank is monotone under edge addition") {
  SplitMix64 rng(22);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 7;
    Graph g = from_mask(n, 0);
    int previous = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (uniform_int(rng, 0, 1) == 0) continue;
        g.add_edge(i, j);
        const int r = generic_rank(g, 3, 5);
        CHECK(r >= previous);
        CHECK(r <= previous + 1);
        previous = r;
      }
  }
}

TEST_CASE("property: laman graphs are generically rigid") {
  SplitMix64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = uniform_int(rng, 2, 8);
    Graph g = random_laman(rng, n);
    REQUIRE(laman_full(g));
    CHECK(generic_rank(g) == static_cast<int>(2 * n - 3));
  }
}

TEST_CASE("property: rigid motions lie in the kernel") {
  SplitMix64 rng(24);
  Graph g = complete_graph(6);
  for (int t = 0; t < 20; ++t) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < 6; ++i) pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
    Eigen::MatrixXd m = rigidity_matrix(g, pts);
    CHECK(m.rows() == 15);
    CHECK(m.cols() == 12);
    Eigen::VectorXd tx(12), ty(12), rot(12);
    for (std::size_t i = 0; i < 6; ++i) {
      tx(2 * i) = 1;
      tx(2 * i + 1) = 0;
      ty(2 * i) = 0;
      ty(2 * i + 1) = 1;
      rot(2 * i) = -pts[i].y;
      rot(2 * i + 1) = pts[i].x;
    }
    CHECK((m * tx).norm() < 1e-12);
    CHECK((m * ty).norm() < 1e-12);
    CHECK((m * rot).norm() < 1e-12);
    CHECK(numerical_rank(m, 1e-9) == 9);
  }
}

TEST_CASE("rigidity matrix from a configuration") {
  Graph g = builtin_graph("edge");
  Configuration c;
  c.set(g.vertex(0), {0, 0});
  c.set(g.vertex(1), {3, 4});
  Eigen::MatrixXd m = rigidity_matrix(g, c);
  REQUIRE(m.rows() == 1);
  CHECK(m(0, 0) == -3);
  CHECK(m(0, 1) == -4);
  CHECK(m(0, 2) == 3);
  CHECK(m(0, 3) == 4);
  Configuration missing;
  missing.set(g.vertex(0), {0, 0});
  CHECK_THROWS(rigidity_matrix(g, missing));
}
