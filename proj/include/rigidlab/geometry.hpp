#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rigidlab/polynomial.hpp"

namespace rigidlab {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2&) const = default;
};

struct RationalPoint {
  Rational x;
  Rational y;
};

/// Planar point assignment keyed by vertex id, kept in insertion order.
class Configuration {
 public:
  Configuration() = default;

  void set(const std::string& id, Point2 p);
  std::optional<Point2> find(const std::string& id) const;
  Point2 at(const std::string& id) const;

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::vector<Point2>& points() const noexcept { return points_; }

 private:
  std::vector<std::string> ids_;
  std::vector<Point2> points_;
};

/// Symmetric n×n matrix of exact squared distances with zero diagonal.
class SquaredDistanceMatrix {
 public:
  explicit SquaredDistanceMatrix(std::size_t n) : n_(n), entries_(n * n, Rational(0)) {}

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
  /// Sets r_ij and r_ji; the diagonal must stay zero.
  void set(std::size_t i, std::size_t j, const Rational& value);

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

/// Determinant of the bordered matrix [[0, 1ᵀ], [1, R_S]] for the points in
/// `subset`, computed by fraction-free Bareiss elimination. Two points give
/// 2·r₁₂; a triangle gives −16·area².
Rational cm_determinant(const SquaredDistanceMatrix& dists, std::span<const std::size_t> subset);

/// Variables r<i>to<j> (1-based, i < j) for the squared distances of n points.
VarTablePtr distance_vars(std::size_t n);
std::string distance_var_name(std::size_t i, std::size_t j);

/// Symbolic Cayley-Menger determinants over distance_vars(n), one for every
/// (d+2)-point subset in lexicographic subset order. Empty when n < d + 2.
std::vector<Polynomial> cm_ideal_generators(std::size_t n, std::size_t d = 2);

SquaredDistanceMatrix squared_distances(const Configuration& config);
SquaredDistanceMatrix squared_distances(std::span<const RationalPoint> points);

struct GramCheck {
  bool realizable = false;
  bool psd = false;
  int rank = 0;
  std::vector<double> eigenvalues;  // ascending
};

/// Gram matrix centered at the first point, G_ij = (r_1i + r_1j − r_ij)/2,
/// tested for positive semi-definiteness and rank ≤ d. Both tests are
/// relative to the largest eigenvalue magnitude.
GramCheck gram_rank_check(const SquaredDistanceMatrix& dists, int d, double tol = 1e-9);

}  // namespace rigidlab
