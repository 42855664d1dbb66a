#include "rigidlab/rigidity.hpp"

#include <algorithm>
#include <stdexcept>

#include "rigidlab/errors.hpp"
#include "rigidlab/rng.hpp"

namespace rigidlab {

Eigen::MatrixXd rigidity_matrix(const Graph& graph, std::span<const Point2> points) {
  if (points.size() != graph.vertex_count()) throw std::invalid_argument("one point per vertex required");
  const auto rows = static_cast<Eigen::Index>(graph.edge_count());
  const auto cols = static_cast<Eigen::Index>(2 * graph.vertex_count());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::Index r = 0;
  for (auto [a, b] : graph.edges()) {
    const double dx = points[a].x - points[b].x;
    const double dy = points[a].y - points[b].y;
    const auto ca = static_cast<Eigen::Index>(2 * a), cb = static_cast<Eigen::Index>(2 * b);
    m(r, ca) = dx;
    m(r, ca + 1) = dy;
    m(r, cb) = -dx;
    m(r, cb + 1) = -dy;
    ++r;
  }
  return m;
}

Eigen::MatrixXd rigidity_matrix(const Graph& graph, const Configuration& config) {
  std::vector<Point2> pts;
  pts.reserve(graph.vertex_count());
  for (const auto& id : graph.vertices()) pts.push_back(config.at(id));
  return rigidity_matrix(graph, pts);
}

int numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++rank;
  return rank;
}

bool laman_count(const Graph& graph) {
  const auto v = static_cast<long long>(graph.vertex_count());
  return static_cast<long long>(graph.edge_count()) == 2 * v - 3;
}

namespace {

class PebbleGame {
 public:
  explicit PebbleGame(std::size_t n) : pebbles_(n, 2), out_(n) {}

  bool insert(std::size_t u, std::size_t v) {
    while (pebbles_[u] < 2)
      if (!fetch(u, u, v)) return false;
    while (pebbles_[v] < 2)
      if (!fetch(v, u, v)) return false;
    --pebbles_[u];
    out_[u].push_back(v);
    return true;
  }

 private:
  // move one free pebble to `start` along directed edges, reversing the path;
  // the pebbles on the edge endpoints u and v are never taken
  bool fetch(std::size_t start, std::size_t u, std::size_t v) {
    const std::size_t n = pebbles_.size();
    std::vector<std::size_t> parent(n, n);
    std::vector<bool> seen(n, false);
    seen[u] = seen[v] = true;
    std::vector<std::size_t> stack{start};
    std::size_t found = n;
    while (!stack.empty() && found == n) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : out_[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        if (pebbles_[y] > 0) {
          found = y;
          break;
        }
        stack.push_back(y);
      }
    }
    if (found == n) return false;
    for (std::size_t y = found; y != start; y = parent[y]) {
      std::size_t x = parent[y];
      auto& edges = out_[x];
      edges.erase(std::find(edges.begin(), edges.end(), y));
      out_[y].push_back(x);
    }
    --pebbles_[found];
    ++pebbles_[start];
    return true;
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace

std::size_t pebble_game_independent_edges(const Graph& graph) {
  if (graph.vertex_count() > kLamanVertexLimit)
    throw ResourceLimitError("pebble game limited to " + std::to_string(kLamanVertexLimit) + " vertices");
  PebbleGame game(graph.vertex_count());
  std::size_t accepted = 0;
  for (auto [a, b] : graph.edges())
    if (game.insert(a, b)) ++accepted;
  return accepted;
}

bool laman_full(const Graph& graph) {
  if (graph.vertex_count() > kLamanVertexLimit)
    throw ResourceLimitError("pebble game limited to " + std::to_string(kLamanVertexLimit) + " vertices");
  if (graph.vertex_count() < 2 || !laman_count(graph)) return false;
  return pebble_game_independent_edges(graph) == graph.edge_count();
}

int generic_rank(const Graph& graph, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("generic_rank needs at least one trial");
  int best = 0;
  std::vector<Point2> pts(graph.vertex_count());
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
    for (auto& p : pts) {
      p.x = rng.uniform();
      p.y = rng.uniform();
    }
    best = std::max(best, numerical_rank(rigidity_matrix(graph, pts), 1e-9));
  }
  return best;
}

int dof(const Graph& graph, int trials, std::uint64_t seed) {
  return 2 * static_cast<int>(graph.vertex_count()) - 3 - generic_rank(graph, trials, seed);
}

}  // namespace rigidlab
