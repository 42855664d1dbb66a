#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigidlab/geometry.hpp"
#include "rigidlab/graph.hpp"
#include "rigidlab/groebner.hpp"
#include "rigidlab/polynomial.hpp"

namespace rigidlab {

/// Removes translations and rotations: `origin_vertex` sits at (0,0) and
/// `axis_vertex` at (x2, 0). Reflections are not quotiented.
struct Pinning {
  std::string origin_vertex;
  std::string axis_vertex;
};

/// Pinning on the first two vertices of `g`.
Pinning default_pinning(const Graph& g);

/// Where a vertex's coordinates live in a system: a variable index, or the
/// pinned constant 0 when empty.
struct VertexSlots {
  std::string id;
  std::optional<std::size_t> x;
  std::optional<std::size_t> y;
};

struct ConstraintSystem {
  VarTablePtr vars;
  std::vector<Polynomial> equations;  // one per edge, in graph edge order
  Pinning pinning;
  Graph graph;
  std::vector<VertexSlots> slots;  // graph vertex order

  std::size_t variable_count() const { return vars->size(); }
  std::size_t equation_count() const { return equations.size(); }

  /// Planar positions for a full variable assignment.
  Configuration configuration(std::span<const double> values) const;
  /// Variable assignment read from a configuration that is already pinned.
  std::vector<double> values_from(const Configuration& pinned) const;
};

/// One unit-distance equation (xa−xb)² + (ya−yb)² − 1 per edge with the
/// pinning applied. Variables: "x2" for the axis vertex, then x<k>, y<k> for
/// the remaining vertices in graph order, where k counts the origin as 1 and
/// the axis vertex as 2.
ConstraintSystem build_unit_system(const Graph& graph, const Pinning& pinning);

/// Rigid motion taking the pinning's origin vertex to (0,0) and its axis
/// vertex onto the non-negative x-axis.
Configuration pin_configuration(const Configuration& config, const Pinning& pinning);

/// Distance-space model: variables r<i>to<j> for every vertex pair, equations
/// r_e − 1 for each edge, optionally followed by the planar Cayley-Menger
/// generators.
struct DistanceSystem {
  VarTablePtr vars;
  std::vector<Polynomial> equations;
  std::size_t edge_equations = 0;
};
DistanceSystem build_distance_system(const Graph& graph, bool include_cm);

/// One common neighbour v of u1=(0,0), u2=(x2,0), u3=(x3,y3): variables
/// {x2, x3, y3, vx, vy} and the three unit-circle equations.
ConstraintSystem shared_neighbor_system();

struct FlatnessPolynomial {
  Polynomial poly;  // over {x2, x3, y3}
};

/// The 8-term locus x2·x3⁴ + 2x2·x3²y3² + x2·y3⁴ − 2x2²x3³ − 2x2²x3·y3²
/// + x2³x3² + x2³y3² − 4x2·y3².
FlatnessPolynomial flatness_eq1();
/// x2·[(x3² − x2·x3 + y3²)² − (4 − x2²)·y3²], built by multiplication.
Polynomial flatness_factored_form();

enum class VerifyMode { membership, factorization };

struct VerificationReport {
  VerifyMode mode;
  bool holds = false;
  std::string polynomial;                    // the 8-term locus, formatted
  // membership mode
  std::vector<std::string> elimination_basis;
  std::string normal_form;
  bool quotient_in_ideal = false;            // locus / x2 also a member?
  bool divisible_by_x2 = false;
  // factorization mode
  std::string expanded_product;
  std::string difference;
};

VerificationReport verify_eq1(VerifyMode mode, const GroebnerLimits& limits = {});

struct LamanAudit {
  long long vars = 0;
  long long eqs = 0;
  long long slack = 0;  // < 0: overconstrained
};

LamanAudit laman_variable_audit(const ConstraintSystem& sys);

}  // namespace rigidlab
