#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "rigidlab/geometry.hpp"

namespace rigidlab {

struct PointSet {
  std::vector<Point2> points;

  std::size_t size() const noexcept { return points.size(); }
};

/// One "x y" pair per line; '#' starts a comment; blank lines skipped.
PointSet read_point_set(std::istream& in);
PointSet load_point_set(const std::string& path);
void write_point_set(std::ostream& out, const PointSet& ps);

/// Number of points equal to an earlier point.
std::size_t duplicate_count(const PointSet& ps);

inline constexpr double kDefaultUnitEps = 1e-9;

/// Unordered pairs with |‖pi − pj‖² − 1| ≤ eps, found through a uniform grid
/// whose cells are just wider than √(1 + eps) so the 3×3 neighbourhood holds
/// every candidate. Agrees exactly with count_unit_pairs_brute.
/// Requires eps ∈ [0, 0.1].
std::uint64_t count_unit_pairs(const PointSet& ps, double eps = kDefaultUnitEps);
std::uint64_t count_unit_pairs_brute(const PointSet& ps, double eps = kDefaultUnitEps);

bool is_sum_of_two_squares(long long value);

/// side×side integer grid scaled by 1/√radius_sq. Throws InputError when
/// radius_sq is not a sum of two squares.
PointSet lattice_config(int side, int radius_sq);

/// n points split over k random lines (random angle, anchor in the window
/// [0, n/k]²), positions uniform along a segment of length n/k. With
/// `integer_positions` the lines are horizontal, π apart, and carry points
/// at x = 0, 1, 2, ...
PointSet lines_config(int n, int k, std::uint64_t seed, bool integer_positions = false);

/// n uniform points in [0, √n]².
PointSet random_config(int n, std::uint64_t seed);

enum class Generator { lattice, lines, random };

Generator parse_generator(const std::string& name);
std::string to_string(Generator g);

struct ScalingParams {
  int radius_sq = 5;           // lattice
  int k = 10;                  // lines
  bool integer_positions = false;
  double eps = kDefaultUnitEps;
};

struct ScalingRow {
  long long n = 0;
  std::uint64_t count = 0;
  double per_n = 0.0;
  double per_n43 = 0.0;
};

struct ScalingReport {
  Generator generator;
  ScalingParams params;
  std::uint64_t seed = 0;
  std::vector<ScalingRow> rows;
  std::string note;
};

/// For lattice, `sizes` are grid sides and n = side²; otherwise point counts.
ScalingReport scaling_report(Generator generator, const std::vector<int>& sizes, const ScalingParams& params,
                             std::uint64_t seed);

nlohmann::json to_json(const ScalingReport& report);
std::string to_text_table(const ScalingReport& report);

}  // namespace rigidlab
