#include "rigidlab/census.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "rigidlab/errors.hpp"
#include "rigidlab/rng.hpp"

namespace rigidlab {

PointSet read_point_set(std::istream& in) {
  PointSet ps;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double x = 0, y = 0;
    if (!(ss >> x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw InputError("point file line " + std::to_string(lineno) + ": expected 'x y'");
    }
    std::string rest;
    if (!(ss >> y) || (ss >> rest)) throw InputError("point file line " + std::to_string(lineno) + ": expected 'x y'");
    if (!std::isfinite(x) || !std::isfinite(y))
      throw InputError("point file line " + std::to_string(lineno) + ": non-finite coordinate");
    ps.points.push_back({x, y});
  }
  return ps;
}

PointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open point file '" + path + "'");
  return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& ps) {
  out << std::setprecision(17);
  for (const auto& p : ps.points) out << p.x << ' ' << p.y << '\n';
}

std::size_t duplicate_count(const PointSet& ps) {
  std::set<std::pair<double, double>> seen;
  std::size_t dups = 0;
  for (const auto& p : ps.points)
    if (!seen.insert({p.x, p.y}).second) ++dups;
  return dups;
}

namespace {

void check_eps(double eps) {
  if (!(eps >= 0.0 && eps <= 0.1)) throw std::invalid_argument("eps must lie in [0, 0.1]");
}

// shared by both counters so the predicate is bit-identical; i < j
inline bool unit_pair(const Point2& a, const Point2& b, double eps) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::abs(dx * dx + dy * dy - 1.0) <= eps;
}

struct CellHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& c) const noexcept {
    auto h = static_cast<std::uint64_t>(c.first) * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(c.second) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2)));
  }
};

}  // namespace

std::uint64_t count_unit_pairs_brute(const PointSet& ps, double eps) {
  check_eps(eps);
  std::uint64_t count = 0;
  const auto& p = ps.points;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (unit_pair(p[i], p[j], eps)) ++count;
  return count;
}

std::uint64_t count_unit_pairs(const PointSet& ps, double eps) {
  check_eps(eps);
  const auto& p = ps.points;
  // margin keeps the floor() of float-divided coordinates within one cell of each other
  const double cell = std::sqrt(1.0 + eps) * (1.0 + 1e-6);
  using Cell = std::pair<std::int64_t, std::int64_t>;
  std::vector<Cell> cells(p.size());
  std::unordered_map<Cell, std::vector<std::uint32_t>, CellHash> grid;
  grid.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    cells[i] = {static_cast<std::int64_t>(std::floor(p[i].x / cell)), static_cast<std::int64_t>(std::floor(p[i].y / cell))};
    grid[cells[i]].push_back(static_cast<std::uint32_t>(i));
  }

  std::uint64_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto [cx, cy] = cells[i];
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = grid.find({cx + dx, cy + dy});
        if (it == grid.end()) continue;
        for (std::uint32_t j : it->second) {
          // a pair belongs to its smaller index
          if (j > i && unit_pair(p[i], p[j], eps)) ++count;
        }
      }
    }
  }
  return count;
}

bool is_sum_of_two_squares(long long value) {
  if (value < 0) return false;
  for (long long a = 0; a * a <= value; ++a) {
    long long rest = value - a * a;
    auto b = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(rest))));
    for (long long c = std::max(0LL, b - 1); c <= b + 1; ++c)
      if (c * c == rest) return true;
  }
  return false;
}

PointSet lattice_config(int side, int radius_sq) {
  if (side < 0) throw InputError("lattice side must be non-negative");
  if (radius_sq <= 0 || !is_sum_of_two_squares(radius_sq))
    throw InputError("radius_sq " + std::to_string(radius_sq) + " is not a positive sum of two squares");
  const double scale = 1.0 / std::sqrt(static_cast<double>(radius_sq));
  PointSet ps;
  ps.points.reserve(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) ps.points.push_back({i * scale, j * scale});
  return ps;
}

PointSet lines_config(int n, int k, std::uint64_t seed, bool integer_positions) {
  if (k < 1 || n < k) throw InputError("lines generator needs k >= 1 and n >= k");
  const double width = static_cast<double>(n) / k;
  PointSet ps;
  ps.points.reserve(static_cast<std::size_t>(n));
  for (int line = 0; line < k; ++line) {
    const int count = n / k + (line < n % k ? 1 : 0);
    if (integer_positions) {
      const double y = std::numbers::pi * line;
      for (int t = 0; t < count; ++t) ps.points.push_back({static_cast<double>(t), y});
      continue;
    }
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(line));
    const double angle = rng.uniform(0.0, std::numbers::pi);
    const double ax = rng.uniform(0.0, width), ay = rng.uniform(0.0, width);
    const double ux = std::cos(angle), uy = std::sin(angle);
    for (int t = 0; t < count; ++t) {
      const double s = rng.uniform(-0.5 * width, 0.5 * width);
      ps.points.push_back({ax + s * ux, ay + s * uy});
    }
  }
  return ps;
}

PointSet random_config(int n, std::uint64_t seed) {
  if (n < 0) throw InputError("point count must be non-negative");
  SplitMix64 rng(seed);
  const double side = std::sqrt(static_cast<double>(n));
  PointSet ps;
  ps.points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = rng.uniform(0.0, side);
    double y = rng.uniform(0.0, side);
    ps.points.push_back({x, y});
  }
  return ps;
}

Generator parse_generator(const std::string& name) {
  if (name == "lattice") return Generator::lattice;
  if (name == "lines") return Generator::lines;
  if (name == "random") return Generator::random;
  throw InputError("unknown generator '" + name + "' (lattice, lines, random)");
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::lattice:
      return "lattice";
    case Generator::lines:
      return "lines";
    case Generator::random:
      return "random";
  }
  return {};
}

ScalingReport scaling_report(Generator generator, const std::vector<int>& sizes, const ScalingParams& params,
                             std::uint64_t seed) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw InputError("scaling sizes must be ascending");
  ScalingReport report{generator, params, seed, {}, {}};
  if (generator == Generator::lines)
    report.note = "counts include both along-line and inter-line unit pairs; they are not separated";
  for (int size : sizes) {
    PointSet ps;
    switch (generator) {
      case Generator::lattice:
        ps = lattice_config(size, params.radius_sq);
        break;
      case Generator::lines:
        ps = lines_config(size, params.k, seed, params.integer_positions);
        break;
      case Generator::random:
        ps = random_config(size, seed);
        break;
    }
    ScalingRow row;
    row.n = static_cast<long long>(ps.size());
    row.count = count_unit_pairs(ps, params.eps);
    const double n = static_cast<double>(row.n);
    row.per_n = n > 0 ? static_cast<double>(row.count) / n : 0.0;
    row.per_n43 = n > 0 ? static_cast<double>(row.count) / std::pow(n, 4.0 / 3.0) : 0.0;
    report.rows.push_back(row);
  }
  return report;
}

nlohmann::json to_json(const ScalingReport& r) {
  nlohmann::json params = {{"eps", r.params.eps}, {"seed", r.seed}};
  if (r.generator == Generator::lattice) params["radius_sq"] = r.params.radius_sq;
  if (r.generator == Generator::lines) {
    params["k"] = r.params.k;
    params["integer_positions"] = r.params.integer_positions;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n}, {"count", row.count}, {"per_n", row.per_n}, {"per_n43", row.per_n43}});
  nlohmann::json out = {{"generator", to_string(r.generator)}, {"params", params}, {"rows", rows}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string to_text_table(const ScalingReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "n" << std::setw(12) << "count" << std::setw(16) << "per_n" << "per_n43\n";
  for (const auto& row : r.rows) {
    out << std::left << std::setw(10) << row.n << std::setw(12) << row.count << std::setw(16)
        << std::setprecision(10) << row.per_n << std::setprecision(10) << row.per_n43 << '\n';
  }
  return out.str();
}

}  // namespace rigidlab
