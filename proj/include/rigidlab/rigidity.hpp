#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "rigidlab/geometry.hpp"
#include "rigidlab/graph.hpp"

namespace rigidlab {

/// |E| × 2|V| Jacobian of the edge-length map (up to a factor 2): the row
/// of edge (a,b) holds pa − pb in a's columns and pb − pa in b's.
/// `points` is indexed by graph vertex order.
Eigen::MatrixXd rigidity_matrix(const Graph& graph, std::span<const Point2> points);
Eigen::MatrixXd rigidity_matrix(const Graph& graph, const Configuration& config);

/// Count of singular values above rel_tol × the largest one.
int numerical_rank(const Eigen::MatrixXd& m, double rel_tol);

/// |E| = 2|V| − 3.
bool laman_count(const Graph& graph);

inline constexpr std::size_t kLamanVertexLimit = 24;

/// Laman's condition decided by the (2,3) pebble game. Throws
/// ResourceLimitError above kLamanVertexLimit vertices.
bool laman_full(const Graph& graph);

/// Number of edges the (2,3) pebble game accepts as independent.
std::size_t pebble_game_independent_edges(const Graph& graph);

/// Max rank of the rigidity matrix over `trials` uniform configurations in
/// [0,1]², trial t drawing from SplitMix64 stream (seed, t).
int generic_rank(const Graph& graph, int trials = 3, std::uint64_t seed = 0);

/// 2|V| − 3 − generic_rank.
int dof(const Graph& graph, int trials = 3, std::uint64_t seed = 0);

}  // namespace rigidlab
