#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "rigidlab/geometry.hpp"
#include "rigidlab/graph.hpp"
#include "rigidlab/polynomial.hpp"
#include "rigidlab/varieties.hpp"

namespace rigidlab {

/// Float evaluator for a system's equations and its exact symbolic Jacobian.
class CompiledSystem {
 public:
  explicit CompiledSystem(const ConstraintSystem& sys);

  std::size_t variables() const noexcept { return nvars_; }
  std::size_t equations() const noexcept { return eqs_.size(); }

  Eigen::VectorXd residual(std::span<const double> x) const;
  Eigen::MatrixXd jacobian(std::span<const double> x) const;

 private:
  std::size_t nvars_;
  std::vector<FloatPolynomial> eqs_;
  std::vector<std::vector<FloatPolynomial>> jac_;  // [equation][variable]
};

struct SolverOptions {
  double tol = 1e-10;
  int max_iter = 100;
};

struct SolveResult {
  bool converged = false;
  std::vector<double> values;  // final iterate, one entry per variable
  Configuration config;
  double residual = 0.0;       // max |equation|
  int iterations = 0;
};

/// Damped Newton with a least-squares SVD step (singular values below 1e-10
/// of the largest are dropped). Each step is halved up to 20 times until the
/// residual 2-norm decreases; a step that never decreases ends the run.
SolveResult newton_solve(const ConstraintSystem& sys, std::span<const double> seed,
                         const SolverOptions& options = {});

/// Keeps iterating from a converged result until the residual stops
/// decreasing (at most `max_iter` more steps). Near singular solutions the
/// position error is of order √residual, so classifying points by distance
/// needs this refinement. The result stays converged.
SolveResult polish_solution(const ConstraintSystem& sys, const SolveResult& sol, int max_iter = 100);

/// Uniform random start in [lo, hi]^vars from SplitMix64 stream (seed, index).
std::vector<double> random_start(std::size_t nvars, std::uint64_t seed, std::uint64_t index, double lo = -2.0,
                                 double hi = 2.0);

/// Variable count minus the Jacobian rank at the solution (singular values
/// above 1e-8 × the largest). Throws std::logic_error on a non-converged result.
int local_dimension(const ConstraintSystem& sys, const SolveResult& sol);

/// Twice the triangle area |x1(y2−y3) + x2(y3−y1) + x3(y1−y2)|.
double collinearity_measure(std::span<const Point2, 3> points);
double collinearity_measure(const Point2& a, const Point2& b, const Point2& c);

/// A graph split into two sides for the coincidence tests. The first three
/// left vertices are the "centers" checked for collinearity.
struct CollapseTarget {
  std::string name;
  Graph graph;
  std::vector<std::string> left;
  std::vector<std::string> right;
};

/// "k33", "k44" or "triangle" (a control with no forced coincidence).
CollapseTarget collapse_target(const std::string& name);

struct CollapseReport {
  std::string graph;
  int attempts = 0;
  std::uint64_t seed = 0;
  double merge_tol = 1e-6;
  SolverOptions solver{};

  int converged = 0;
  /// some same-side pair closer than merge_tol
  int coincident_neighbor_count = 0;
  int coincident_left_count = 0;   // among centers u_i
  int coincident_right_count = 0;  // among neighbours v_j
  /// centers u1,u2,u3 span area < merge_tol
  int collinear_center_count = 0;
  int collinear_only_count = 0;
  int distinct_nondegenerate_count = 0;
  std::map<int, int> local_dimension_histogram;
};

/// Solves the pinned unit system from `attempts` random starts, polishes each
/// converged solution and bins it. converged = coincident + collinear_only +
/// distinct.
CollapseReport collapse_experiment(const CollapseTarget& target, int attempts, std::uint64_t seed,
                                   double merge_tol = 1e-6, const SolverOptions& options = {});

nlohmann::json to_json(const CollapseReport& report);

/// Points (x3, y3) with y3 ∈ [0, 3] on (x3² − x2·x3 + y3²)² = (4 − x2²)·y3²,
/// the flatness locus divided by x2. x3 runs over `count` evenly spaced values
/// in [x2/2 − 1, x2/2 + 1]; roots in y3 are bracketed on a fine grid and
/// refined by bisection. Requires 0 < |x2| < 2.
std::vector<Point2> sample_flatness_curve(double x2, int count);

}  // namespace rigidlab
