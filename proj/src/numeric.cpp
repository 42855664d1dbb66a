#include "rigidlab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rigidlab/errors.hpp"
#include "rigidlab/rng.hpp"

namespace rigidlab {

CompiledSystem::CompiledSystem(const ConstraintSystem& sys) : nvars_(sys.variable_count()) {
  eqs_.reserve(sys.equations.size());
  jac_.reserve(sys.equations.size());
  for (const auto& e : sys.equations) {
    eqs_.emplace_back(e);
    std::vector<FloatPolynomial> row;
    row.reserve(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) row.emplace_back(differentiate(e, v));
    jac_.push_back(std::move(row));
  }
}

Eigen::VectorXd CompiledSystem::residual(std::span<const double> x) const {
  Eigen::VectorXd f(static_cast<Eigen::Index>(eqs_.size()));
  for (std::size_t i = 0; i < eqs_.size(); ++i) f(static_cast<Eigen::Index>(i)) = eqs_[i](x);
  return f;
}

Eigen::MatrixXd CompiledSystem::jacobian(std::span<const double> x) const {
  Eigen::MatrixXd j(static_cast<Eigen::Index>(eqs_.size()), static_cast<Eigen::Index>(nvars_));
  for (std::size_t r = 0; r < eqs_.size(); ++r)
    for (std::size_t c = 0; c < nvars_; ++c) j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = jac_[r][c](x);
  return j;
}

namespace {

constexpr double kStepCutoff = 1e-10;
constexpr int kMaxHalvings = 20;
constexpr double kRankCutoff = 1e-8;

double max_abs(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

SolveResult newton_solve(const ConstraintSystem& sys, std::span<const double> seed, const SolverOptions& options) {
  if (seed.size() != sys.variable_count()) throw std::invalid_argument("seed length does not match variable count");
  if (!(options.tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");

  const CompiledSystem compiled(sys);
  const auto n = static_cast<Eigen::Index>(seed.size());
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(seed.data(), n);
  auto span_of = [](const Eigen::VectorXd& v) { return std::span<const double>(v.data(), static_cast<std::size_t>(v.size())); };

  SolveResult out;
  Eigen::VectorXd f = compiled.residual(span_of(x));
  while (out.iterations < options.max_iter && max_abs(f) >= options.tol) {
    Eigen::MatrixXd j = compiled.jacobian(span_of(x));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(j, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(kStepCutoff);
    Eigen::VectorXd step = -svd.solve(f);

    const double before = f.norm();
    bool accepted = false;
    double scale = 1.0;
    for (int h = 0; h <= kMaxHalvings; ++h, scale *= 0.5) {
      Eigen::VectorXd trial = x + scale * step;
      Eigen::VectorXd ft = compiled.residual(span_of(trial));
      if (ft.norm() < before) {
        x = std::move(trial);
        f = std::move(ft);
        accepted = true;
        break;
      }
    }
    ++out.iterations;
    if (!accepted) break;
  }

  out.residual = max_abs(f);
  out.converged = std::isfinite(out.residual) && out.residual < options.tol;
  out.values.assign(x.data(), x.data() + x.size());
  out.config = sys.configuration(out.values);
  return out;
}

SolveResult polish_solution(const ConstraintSystem& sys, const SolveResult& sol, int max_iter) {
  if (!sol.converged) throw std::logic_error("only converged solutions are polished");
  SolveResult refined = newton_solve(sys, sol.values, SolverOptions{std::numeric_limits<double>::min(), max_iter});
  if (!(refined.residual <= sol.residual)) return sol;
  refined.converged = true;
  refined.iterations += sol.iterations;
  return refined;
}

std::vector<double> random_start(std::size_t nvars, std::uint64_t seed, std::uint64_t index, double lo, double hi) {
  SplitMix64 rng = SplitMix64::stream(seed, index);
  std::vector<double> x(nvars);
  for (auto& v : x) v = rng.uniform(lo, hi);
  return x;
}

int local_dimension(const ConstraintSystem& sys, const SolveResult& sol) {
  if (!sol.converged) throw std::logic_error("local dimension requested at a non-converged point");
  const CompiledSystem compiled(sys);
  Eigen::MatrixXd j = compiled.jacobian(sol.values);
  int rank = 0;
  if (j.size() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(j);
    const auto& s = svd.singularValues();
    if (s.size() > 0 && s(0) > 0.0)
      for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > kRankCutoff * s(0)) ++rank;
  }
  return static_cast<int>(sys.variable_count()) - rank;
}

double collinearity_measure(const Point2& a, const Point2& b, const Point2& c) {
  return std::abs(a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
}

double collinearity_measure(std::span<const Point2, 3> p) { return collinearity_measure(p[0], p[1], p[2]); }

CollapseTarget collapse_target(const std::string& name) {
  if (name == "k33") return {name, complete_bipartite(3, 3), {"u1", "u2", "u3"}, {"v1", "v2", "v3"}};
  if (name == "k44") return {name, complete_bipartite(4, 4), {"u1", "u2", "u3", "u4"}, {"v1", "v2", "v3", "v4"}};
  if (name == "triangle") return {name, complete_graph(3), {"u1", "u2", "u3"}, {}};
  throw InputError("collapse experiment supports k33, k44 and triangle, not '" + name + "'");
}

namespace {

bool has_close_pair(const Configuration& c, const std::vector<std::string>& ids, double tol) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      Point2 a = c.at(ids[i]), b = c.at(ids[j]);
      if (std::hypot(a.x - b.x, a.y - b.y) < tol) return true;
    }
  }
  return false;
}

}  // namespace

CollapseReport collapse_experiment(const CollapseTarget& target, int attempts, std::uint64_t seed, double merge_tol,
                                   const SolverOptions& options) {
  if (attempts < 1) throw std::invalid_argument("collapse experiment needs at least one attempt");
  if (target.left.size() < 3) throw std::invalid_argument("collapse target needs three centers");

  CollapseReport report;
  report.graph = target.name;
  report.attempts = attempts;
  report.seed = seed;
  report.merge_tol = merge_tol;
  report.solver = options;

  const ConstraintSystem sys = build_unit_system(target.graph, default_pinning(target.graph));
  for (int a = 0; a < attempts; ++a) {
    auto start = random_start(sys.variable_count(), seed, static_cast<std::uint64_t>(a));
    SolveResult sol = newton_solve(sys, start, options);
    if (!sol.converged) continue;
    ++report.converged;
    sol = polish_solution(sys, sol);

    const bool left = has_close_pair(sol.config, target.left, merge_tol);
    const bool right = has_close_pair(sol.config, target.right, merge_tol);
    const double area = 0.5 * collinearity_measure(sol.config.at(target.left[0]), sol.config.at(target.left[1]),
                                                   sol.config.at(target.left[2]));
    const bool collinear = area < merge_tol;

    report.coincident_left_count += left ? 1 : 0;
    report.coincident_right_count += right ? 1 : 0;
    report.collinear_center_count += collinear ? 1 : 0;
    if (left || right) {
      ++report.coincident_neighbor_count;
    } else if (collinear) {
      ++report.collinear_only_count;
    } else {
      ++report.distinct_nondegenerate_count;
    }
    ++report.local_dimension_histogram[local_dimension(sys, sol)];
  }
  return report;
}

nlohmann::json to_json(const CollapseReport& r) {
  nlohmann::json dims = nlohmann::json::object();
  for (auto [d, count] : r.local_dimension_histogram) dims[std::to_string(d)] = count;
  return {
      {"graph", r.graph},
      {"params",
       {{"attempts", r.attempts},
        {"seed", r.seed},
        {"merge_tol", r.merge_tol},
        {"tol", r.solver.tol},
        {"max_iter", r.solver.max_iter}}},
      {"attempts", r.attempts},
      {"converged", r.converged},
      {"coincident_neighbor_count", r.coincident_neighbor_count},
      {"coincident_left_count", r.coincident_left_count},
      {"coincident_right_count", r.coincident_right_count},
      {"collinear_center_count", r.collinear_center_count},
      {"collinear_only_count", r.collinear_only_count},
      {"distinct_nondegenerate_count", r.distinct_nondegenerate_count},
      {"local_dimension_histogram", dims},
  };
}

std::vector<Point2> sample_flatness_curve(double x2, int count) {
  if (!(std::abs(x2) > 0.0 && std::abs(x2) < 2.0)) throw std::invalid_argument("x2 must satisfy 0 < |x2| < 2");
  if (count < 1) throw std::invalid_argument("curve sample count must be positive");

  const double s2 = 4.0 - x2 * x2;
  std::vector<Point2> out;
  constexpr int kBrackets = 3000;
  constexpr double kTop = 3.0;
  for (int i = 0; i < count; ++i) {
    const double x3 = count == 1 ? x2 / 2.0 : (x2 / 2.0 - 1.0) + 2.0 * i / (count - 1);
    const double c = x3 * x3 - x2 * x3;
    auto f = [&](double y) {
      double a = c + y * y;
      return a * a - s2 * y * y;
    };
    double lo = 0.0, flo = f(lo);
    if (flo == 0.0) out.push_back({x3, 0.0});
    for (int k = 1; k <= kBrackets; ++k) {
      const double hi = kTop * k / kBrackets;
      const double fhi = f(hi);
      if (fhi == 0.0) {
        out.push_back({x3, hi});
      } else if (flo != 0.0 && (flo < 0.0) != (fhi < 0.0)) {
        double a = lo, b = hi, fa = flo;
        for (int it = 0; it < 200 && b - a > 0.0; ++it) {
          double m = 0.5 * (a + b);
          if (m <= a || m >= b) break;
          double fm = f(m);
          if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
          } else {
            b = m;
          }
        }
        out.push_back({x3, 0.5 * (a + b)});
      }
      lo = hi;
      flo = fhi;
    }
  }
  return out;
}

}  // namespace rigidlab
