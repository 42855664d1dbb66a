#include "rigidlab/varieties.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "rigidlab/errors.hpp"

namespace rigidlab {

namespace {

using NameFn = std::function<std::pair<std::string, std::string>(std::size_t vertex, std::size_t label)>;

std::pair<std::string, std::string> numbered_names(std::size_t, std::size_t label) {
  return {"x" + std::to_string(label), "y" + std::to_string(label)};
}

ConstraintSystem build_named(const Graph& graph, const Pinning& pinning, const NameFn& names) {
  if (graph.vertex_count() < 2) throw InputError("a unit system needs at least two vertices");
  const std::size_t origin = graph.require(pinning.origin_vertex);
  const std::size_t axis = graph.require(pinning.axis_vertex);
  if (origin == axis) throw InputError("pinning needs two distinct vertices");

  std::vector<std::string> var_names;
  std::vector<VertexSlots> slots(graph.vertex_count());
  var_names.push_back(names(axis, 2).first);
  slots[axis] = VertexSlots{graph.vertex(axis), 0, std::nullopt};
  slots[origin] = VertexSlots{graph.vertex(origin), std::nullopt, std::nullopt};
  std::size_t label = 3;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (v == origin || v == axis) continue;
    auto [xn, yn] = names(v, label++);
    slots[v] = VertexSlots{graph.vertex(v), var_names.size(), var_names.size() + 1};
    var_names.push_back(xn);
    var_names.push_back(yn);
  }

  ConstraintSystem sys{make_vars(std::move(var_names)), {}, pinning, graph, std::move(slots)};
  auto coord = [&](const std::optional<std::size_t>& slot) {
    if (!slot) return Polynomial(sys.vars);
    return Polynomial::monomial(sys.vars, Monomial::variable(sys.vars->size(), *slot));
  };
  const Polynomial one = Polynomial::constant(sys.vars, 1);
  for (auto [a, b] : graph.edges()) {
    Polynomial dx = coord(sys.slots[a].x) - coord(sys.slots[b].x);
    Polynomial dy = coord(sys.slots[a].y) - coord(sys.slots[b].y);
    sys.equations.push_back(dx * dx + dy * dy - one);
  }
  return sys;
}

}  // namespace

Pinning default_pinning(const Graph& g) {
  if (g.vertex_count() < 2) throw InputError("pinning needs at least two vertices");
  return Pinning{g.vertex(0), g.vertex(1)};
}

Configuration ConstraintSystem::configuration(std::span<const double> values) const {
  if (values.size() != vars->size()) throw std::invalid_argument("assignment length does not match variable count");
  Configuration c;
  for (const auto& s : slots) {
    c.set(s.id, Point2{s.x ? values[*s.x] : 0.0, s.y ? values[*s.y] : 0.0});
  }
  return c;
}

std::vector<double> ConstraintSystem::values_from(const Configuration& pinned) const {
  std::vector<double> values(vars->size(), 0.0);
  for (const auto& s : slots) {
    Point2 p = pinned.at(s.id);
    if (s.x) values[*s.x] = p.x;
    if (s.y) values[*s.y] = p.y;
  }
  return values;
}

ConstraintSystem build_unit_system(const Graph& graph, const Pinning& pinning) {
  return build_named(graph, pinning, numbered_names);
}

Configuration pin_configuration(const Configuration& config, const Pinning& pinning) {
  const Point2 o = config.at(pinning.origin_vertex);
  const Point2 a = config.at(pinning.axis_vertex);
  const double angle = std::atan2(a.y - o.y, a.x - o.x);
  const double c = std::cos(-angle), s = std::sin(-angle);
  Configuration out;
  for (std::size_t i = 0; i < config.size(); ++i) {
    Point2 p = config.points()[i];
    double dx = p.x - o.x, dy = p.y - o.y;
    out.set(config.ids()[i], Point2{c * dx - s * dy, s * dx + c * dy});
  }
  // exact pins, not rounded ones
  out.set(pinning.origin_vertex, Point2{0.0, 0.0});
  out.set(pinning.axis_vertex, Point2{out.at(pinning.axis_vertex).x, 0.0});
  return out;
}

DistanceSystem build_distance_system(const Graph& graph, bool include_cm) {
  const std::size_t n = graph.vertex_count();
  DistanceSystem sys{distance_vars(n), {}, 0};
  for (auto [a, b] : graph.edges()) {
    sys.equations.push_back(Polynomial::variable(sys.vars, distance_var_name(a, b)) -
                            Polynomial::constant(sys.vars, 1));
  }
  sys.edge_equations = sys.equations.size();
  if (include_cm) {
    for (auto& g : cm_ideal_generators(n, 2)) sys.equations.push_back(g.rebase(sys.vars));
  }
  return sys;
}

ConstraintSystem shared_neighbor_system() {
  Graph star({"u1", "u2", "u3", "v"}, {{"u1", "v"}, {"u2", "v"}, {"u3", "v"}});
  return build_named(star, Pinning{"u1", "u2"}, [](std::size_t vertex, std::size_t label) {
    if (vertex == 3) return std::pair<std::string, std::string>{"vx", "vy"};
    return numbered_names(vertex, label);
  });
}

FlatnessPolynomial flatness_eq1() {
  static const VarTablePtr vars = make_vars({"x2", "x3", "y3"});
  return FlatnessPolynomial{parse(
      "x2*x3^4 + 2*x2*x3^2*y3^2 + x2*y3^4 - 2*x2^2*x3^3 - 2*x2^2*x3*y3^2 + x2^3*x3^2 + x2^3*y3^2 - 4*x2*y3^2",
      vars)};
}

Polynomial flatness_factored_form() {
  const VarTablePtr& vars = flatness_eq1().poly.vars();
  auto v = [&](const char* name) { return Polynomial::variable(vars, name); };
  auto c = [&](long k) { return Polynomial::constant(vars, k); };
  Polynomial x2 = v("x2"), x3 = v("x3"), y3 = v("y3");
  Polynomial inner = x3 * x3 - x2 * x3 + y3 * y3;
  return x2 * (inner * inner - (c(4) - x2 * x2) * y3 * y3);
}

VerificationReport verify_eq1(VerifyMode mode, const GroebnerLimits& limits) {
  VerificationReport report;
  report.mode = mode;
  const Polynomial eq1 = flatness_eq1().poly;
  report.polynomial = format(eq1);

  if (mode == VerifyMode::factorization) {
    Polynomial product = flatness_factored_form();
    report.expanded_product = format(product);
    Polynomial diff = eq1 - product;
    report.difference = format(diff);
    report.holds = diff.is_zero();
    return report;
  }

  ConstraintSystem sys = shared_neighbor_system();
  IdealBasis elim = eliminate(sys.equations, {"vx", "vy"}, limits);
  for (const auto& g : elim.generators) report.elimination_basis.push_back(format(g));

  Polynomial target = eq1.rebase(sys.vars);
  Polynomial nf = normal_form(target, elim);
  report.normal_form = format(nf);
  report.holds = nf.is_zero();

  Polynomial x2 = Polynomial::variable(sys.vars, "x2");
  std::vector<Polynomial> x2_only{x2};
  Polynomial rem = normal_form(target, x2_only, MonomialOrder::lex());
  report.divisible_by_x2 = rem.is_zero();
  if (report.divisible_by_x2) {
    // divide out x2 termwise
    std::vector<Term> q;
    for (const auto& t : target.terms()) {
      Monomial m = t.mono;
      m[sys.vars->require("x2")] -= 1;
      q.push_back(Term{m, t.coeff});
    }
    report.quotient_in_ideal = normal_form(Polynomial(sys.vars, std::move(q)), elim).is_zero();
  }
  return report;
}

LamanAudit laman_variable_audit(const ConstraintSystem& sys) {
  LamanAudit a;
  a.vars = static_cast<long long>(sys.variable_count());
  a.eqs = static_cast<long long>(sys.equation_count());
  a.slack = a.vars - a.eqs;
  return a;
}

}  // namespace rigidlab
