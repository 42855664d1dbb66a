#include "rigidlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

#include "rigidlab/errors.hpp"

namespace rigidlab {

void Configuration::set(const std::string& id, Point2 p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw std::invalid_argument("non-finite coordinate for " + id);
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it != ids_.end()) {
    points_[static_cast<std::size_t>(it - ids_.begin())] = p;
    return;
  }
  ids_.push_back(id);
  points_.push_back(p);
}

std::optional<Point2> Configuration::find(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return points_[static_cast<std::size_t>(it - ids_.begin())];
}

Point2 Configuration::at(const std::string& id) const {
  if (auto p = find(id)) return *p;
  throw std::out_of_range("no point for vertex " + id);
}

void SquaredDistanceMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= n_ || j >= n_) throw std::out_of_range("distance index out of range");
  if (i == j) {
    if (value != 0) throw std::invalid_argument("diagonal of a distance matrix must be zero");
    return;
  }
  entries_[i * n_ + j] = value;
  entries_[j * n_ + i] = value;
}

namespace {

Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Polynomial laplace_determinant(const std::vector<std::vector<Polynomial>>& m, const VarTablePtr& vars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(vars, 1);
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;

  std::function<Polynomial(std::size_t, const std::vector<std::size_t>&)> rec =
      [&](std::size_t row, const std::vector<std::size_t>& remaining) -> Polynomial {
    if (remaining.size() == 1) return m[row][remaining.front()];
    Polynomial sum(vars);
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      const Polynomial& entry = m[row][remaining[k]];
      if (entry.is_zero()) continue;
      std::vector<std::size_t> rest;
      rest.reserve(remaining.size() - 1);
      for (std::size_t c = 0; c < remaining.size(); ++c)
        if (c != k) rest.push_back(remaining[c]);
      Polynomial minor = entry * rec(row + 1, rest);
      sum = (k % 2 == 0) ? sum + minor : sum - minor;
    }
    return sum;
  };
  return rec(0, cols);
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Rational cm_determinant(const SquaredDistanceMatrix& dists, std::span<const std::size_t> subset) {
  if (subset.size() < 2) throw std::invalid_argument("Cayley-Menger determinant needs at least two points");
  for (auto i : subset)
    if (i >= dists.size()) throw std::out_of_range("point index " + std::to_string(i) + " out of range");
  const std::size_t k = subset.size();
  std::vector<std::vector<Rational>> m(k + 1, std::vector<Rational>(k + 1, Rational(1)));
  m[0][0] = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m[a + 1][b + 1] = dists(subset[a], subset[b]);
  return bareiss_determinant(std::move(m));
}

std::string distance_var_name(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return "r" + std::to_string(i + 1) + "to" + std::to_string(j + 1);
}

VarTablePtr distance_vars(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) names.push_back(distance_var_name(i, j));
  return make_vars(std::move(names));
}

std::vector<Polynomial> cm_ideal_generators(std::size_t n, std::size_t d) {
  std::vector<Polynomial> out;
  const std::size_t k = d + 2;
  if (n < k) return out;
  VarTablePtr vars = distance_vars(n);
  for_each_subset(n, k, [&](const std::vector<std::size_t>& subset) {
    std::vector<std::vector<Polynomial>> m(k + 1, std::vector<Polynomial>(k + 1, Polynomial::constant(vars, 1)));
    m[0][0] = Polynomial(vars);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        m[a + 1][b + 1] = (a == b) ? Polynomial(vars)
                                   : Polynomial::variable(vars, distance_var_name(subset[a], subset[b]));
      }
    }
    out.push_back(laplace_determinant(m, vars));
  });
  return out;
}

SquaredDistanceMatrix squared_distances(std::span<const RationalPoint> points) {
  SquaredDistanceMatrix r(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Rational dx = points[i].x - points[j].x;
      Rational dy = points[i].y - points[j].y;
      r.set(i, j, dx * dx + dy * dy);
    }
  }
  return r;
}

SquaredDistanceMatrix squared_distances(const Configuration& config) {
  // doubles convert to rationals exactly, so the result is exact for the given floats
  std::vector<RationalPoint> pts;
  pts.reserve(config.size());
  for (const auto& p : config.points()) pts.push_back(RationalPoint{Rational(p.x), Rational(p.y)});
  return squared_distances(std::span<const RationalPoint>(pts));
}

GramCheck gram_rank_check(const SquaredDistanceMatrix& dists, int d, double tol) {
  GramCheck out;
  const std::size_t n = dists.size();
  if (n <= 1) {
    out.psd = true;
    out.realizable = true;
    return out;
  }
  const auto m = static_cast<Eigen::Index>(n - 1);
  Eigen::MatrixXd gram(m, m);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      Rational g = (dists(0, i) + dists(0, j) - dists(i, j)) / 2;
      gram(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) = g.get_d();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  double scale = ev.cwiseAbs().maxCoeff();
  out.psd = true;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    out.eigenvalues.push_back(ev(i));
    if (ev(i) < -tol * std::max(scale, 1.0)) out.psd = false;
    if (scale > 0 && ev(i) > tol * scale) ++out.rank;
  }
  out.realizable = out.psd && out.rank <= d;
  return out;
}

}  // namespace rigidlab
