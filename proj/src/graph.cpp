#include "rigidlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "rigidlab/errors.hpp"

namespace rigidlab {

Graph::Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges) {
  for (auto& v : vertices) add_vertex(v);
  for (const auto& [a, b] : edges) add_edge(a, b);
}

std::size_t Graph::add_vertex(const std::string& id) {
  if (index_of(id)) throw InputError("duplicate vertex '" + id + "'");
  vertices_.push_back(id);
  return vertices_.size() - 1;
}

void Graph::add_edge(const std::string& a, const std::string& b) { add_edge(require(a), require(b)); }

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= vertices_.size() || b >= vertices_.size()) throw InputError("edge references an unknown vertex");
  if (a == b) throw InputError("self-loop at vertex '" + vertices_[a] + "'");
  if (a > b) std::swap(a, b);
  if (has_edge(a, b)) throw InputError("duplicate edge " + vertices_[a] + "-" + vertices_[b]);
  edges_.emplace_back(a, b);
}

std::optional<std::size_t> Graph::index_of(std::string_view id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::require(std::string_view id) const {
  if (auto i = index_of(id)) return *i;
  throw InputError("unknown vertex '" + std::string(id) + "'");
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::find(edges_.begin(), edges_.end(), Edge{a, b}) != edges_.end();
}

bool Graph::connected() const {
  if (vertices_.empty()) return true;
  std::vector<std::size_t> parent(vertices_.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices_.size();
  for (auto [a, b] : edges_) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw InputError("graph JSON must be an object with \"vertices\" and \"edges\"");
  const auto& vs = j.at("vertices");
  const auto& es = j.at("edges");
  if (!vs.is_array() || !es.is_array()) throw InputError("graph \"vertices\" and \"edges\" must be arrays");
  Graph g;
  for (const auto& v : vs) {
    if (!v.is_string()) throw InputError("vertex ids must be strings");
    g.add_vertex(v.get<std::string>());
  }
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InputError("each edge must be a pair of vertex id strings");
    g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return g;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({g.vertex(a), g.vertex(b)});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed graph file '" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  Graph g;
  for (std::size_t i = 1; i <= m; ++i) g.add_vertex("u" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) g.add_edge(i, m + j);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex("u" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex("u" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex("u" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

namespace {

const std::vector<std::pair<std::string, std::string>> kMoserEdges = {
    {"m1", "m2"}, {"m1", "m3"}, {"m2", "m3"}, {"m2", "m4"}, {"m3", "m4"}, {"m1", "m5"},
    {"m1", "m6"}, {"m5", "m6"}, {"m5", "m7"}, {"m6", "m7"}, {"m4", "m7"},
};

}  // namespace

Graph builtin_graph(std::string_view name) {
  if (name == "k33") return complete_bipartite(3, 3);
  if (name == "k44") return complete_bipartite(4, 4);
  if (name == "triangle") return complete_graph(3);
  if (name == "c4") return cycle_graph(4);
  if (name == "edge") return path_graph(2);
  if (name == "moser") return Graph({"m1", "m2", "m3", "m4", "m5", "m6", "m7"}, kMoserEdges);
  throw InputError("unknown builtin graph '" + std::string(name) + "'");
}

Graph resolve_graph(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin_graph(std::string_view(source).substr(prefix.size()));
  return load_graph_file(source);
}

Configuration moser_spindle_realization() {
  // two rhombi of equilateral triangles hinged at m1, opened until the tips are 1 apart
  const double pi = std::numbers::pi;
  const double sqrt3 = std::sqrt(3.0);
  const double open = 2.0 * std::asin(1.0 / (2.0 * sqrt3));
  auto polar = [](double r, double a) { return Point2{r * std::cos(a), r * std::sin(a)}; };
  const double a = pi / 2.0;  // first rhombus axis
  const double b = a + open;
  Configuration c;
  c.set("m1", {0.0, 0.0});
  c.set("m2", polar(1.0, a - pi / 6.0));
  c.set("m3", polar(1.0, a + pi / 6.0));
  c.set("m4", polar(sqrt3, a));
  c.set("m5", polar(1.0, b - pi / 6.0));
  c.set("m6", polar(1.0, b + pi / 6.0));
  c.set("m7", polar(sqrt3, b));
  return c;
}

}  // namespace rigidlab
