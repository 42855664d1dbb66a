#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rigidlab/geometry.hpp"

namespace rigidlab {

/// Simple undirected graph with string vertex ids. No self-loops, no
/// duplicate edges, edges only between known vertices.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // first < second

  Graph() = default;
  Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t add_vertex(const std::string& id);
  /// Throws InputError on self-loop, duplicate edge or unknown vertex.
  void add_edge(const std::string& a, const std::string& b);
  void add_edge(std::size_t a, std::size_t b);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& vertex(std::size_t i) const { return vertices_.at(i); }

  std::optional<std::size_t> index_of(std::string_view id) const;
  std::size_t require(std::string_view id) const;
  bool has_edge(std::size_t a, std::size_t b) const;
  bool connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Reads {"vertices": [...], "edges": [[a, b], ...]}. Throws InputError.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);
Graph load_graph_file(const std::string& path);

Graph complete_bipartite(std::size_t m, std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Names accepted after "builtin:": k33, k44, triangle, c4, moser, edge.
Graph builtin_graph(std::string_view name);
/// "builtin:<name>" or a path to a graph JSON file.
Graph resolve_graph(const std::string& source);

/// A unit-distance embedding of the Moser spindle (7 vertices, 11 edges).
Configuration moser_spindle_realization();

}  // namespace rigidlab
