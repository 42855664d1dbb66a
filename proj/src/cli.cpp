#include "rigidlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rigidlab/census.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/geometry.hpp"
#include "rigidlab/graph.hpp"
#include "rigidlab/groebner.hpp"
#include "rigidlab/numeric.hpp"
#include "rigidlab/rigidity.hpp"
#include "rigidlab/varieties.hpp"

namespace rigidlab {

using nlohmann::json;

namespace {

struct Options {
  std::string graph = "builtin:k33";
  std::string points;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int max_iter = 100;
  std::optional<std::size_t> limit;
  std::string limits;
  std::string format = "json";
  std::string output;

  // per-subcommand
  std::string subset;
  int dim = 2;
  double gram_tol = 1e-9;
  int trials = 3;
  std::string pin;
  std::string model = "coordinates";
  bool include_cm = false;
  std::string polys;
  std::string input;
  std::string vars;
  std::string order = "grevlex";
  std::string member;
  std::string drop;
  std::string mode = "membership";
  std::string start;
  int attempts = 1000;
  double merge_tol = 1e-6;
  double x2 = 1.0;
  int count = 50;
  std::string generator;
  int side = 10;
  int radius_sq = 5;
  int n = 1000;
  int k = 10;
  double eps = kDefaultUnitEps;
  bool integer_positions = false;
  bool brute = false;
  std::string sizes;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, sep)) {
    auto b = item.find_first_not_of(" \t\r\n");
    auto e = item.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

template <typename T>
std::vector<T> parse_numbers(const std::string& text, const char* what) {
  std::vector<T> out;
  for (const auto& s : split(text, ',')) {
    std::istringstream ss(s);
    T v{};
    std::string rest;
    if (!(ss >> v) || (ss >> rest)) throw InputError(std::string("bad ") + what + " entry '" + s + "'");
    out.push_back(v);
  }
  return out;
}

GroebnerLimits effective_limits(const Options& o) {
  GroebnerLimits l = GroebnerLimits::from_env();
  if (!o.limits.empty()) l = GroebnerLimits::parse(o.limits, l);
  if (o.limit) l.max_pairs = *o.limit;
  return l;
}

json limits_json(const GroebnerLimits& l) { return {{"pairs", l.max_pairs}, {"basis", l.max_basis}}; }

Pinning pinning_for(const Graph& g, const Options& o) {
  if (o.pin.empty()) return default_pinning(g);
  auto ids = split(o.pin, ',');
  if (ids.size() != 2) throw InputError("--pin expects two vertex ids 'a,b'");
  return Pinning{ids[0], ids[1]};
}

json config_json(const Configuration& c) {
  json out = json::object();
  for (std::size_t i = 0; i < c.size(); ++i) out[c.ids()[i]] = {c.points()[i].x, c.points()[i].y};
  return out;
}

// Polynomials from --polys (';'-separated) or --input (one per line, '#' comments).
std::vector<Polynomial> read_polys(const Options& o, const VarTablePtr& vars) {
  std::vector<std::string> texts;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw InputError("cannot open polynomial file '" + o.input + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      if (line.find_first_not_of(" \t\r") != std::string::npos) texts.push_back(line);
    }
  }
  for (auto& t : split(o.polys, ';')) texts.push_back(t);
  if (texts.empty()) throw InputError("no polynomials given (use --polys or --input)");
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse(t, vars));
  return out;
}

VarTablePtr read_vars(const Options& o) {
  auto names = split(o.vars, ',');
  if (names.empty()) throw InputError("--vars is required, e.g. --vars x,y");
  return make_vars(names);
}

MonomialOrder order_for(const std::string& name, std::size_t nvars) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name.rfind("elim:", 0) == 0) {
    auto k = parse_numbers<std::size_t>(name.substr(5), "elimination block");
    if (k.size() != 1) throw InputError("--order elim:K expects one block size");
    return MonomialOrder::block_elimination(k.front(), nvars);
  }
  throw InputError("unknown order '" + name + "' (lex, grevlex, elim:K)");
}

json polys_json(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(format(p));
  return out;
}

json stats_json(const BuchbergerStats& s) {
  return {{"pairs_considered", s.pairs_considered},
          {"pairs_skipped_coprime", s.pairs_skipped_coprime},
          {"pairs_reduced", s.pairs_reduced},
          {"zero_reductions", s.zero_reductions}};
}

// ---- subcommand handlers: each returns (params, result) ----

struct Outcome {
  json params = json::object();
  json result = json::object();
  std::optional<std::string> text;  // replaces the flattened text rendering
};

Outcome cmd_cm(const Options& o) {
  if (o.points.empty()) throw InputError("cm requires --points FILE");
  PointSet ps = load_point_set(o.points);
  Configuration cfg;
  for (std::size_t i = 0; i < ps.size(); ++i) cfg.set(std::to_string(i), ps.points[i]);
  SquaredDistanceMatrix r = squared_distances(cfg);
  std::vector<std::size_t> subset;
  if (o.subset.empty()) {
    for (std::size_t i = 0; i < ps.size(); ++i) subset.push_back(i);
  } else {
    subset = parse_numbers<std::size_t>(o.subset, "subset");
  }
  GramCheck gram = gram_rank_check(r, o.dim, o.gram_tol);
  Outcome out;
  out.params = {{"points", o.points}, {"subset", subset}, {"dim", o.dim}, {"gram_tol", o.gram_tol}};
  out.result = {{"n", ps.size()},
                {"determinant", format(cm_determinant(r, subset))},
                {"gram", {{"realizable", gram.realizable}, {"psd", gram.psd}, {"rank", gram.rank},
                          {"eigenvalues", gram.eigenvalues}}}};
  return out;
}

Outcome cmd_laman(const Options& o) {
  Graph g = resolve_graph(o.graph);
  Outcome out;
  out.params = {{"graph", o.graph}};
  out.result = {{"count_ok", laman_count(g)},
                {"full_ok", laman_full(g)},
                {"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"independent_edges", pebble_game_independent_edges(g)}};
  return out;
}

Outcome cmd_rank(const Options& o) {
  Graph g = resolve_graph(o.graph);
  int rank = generic_rank(g, o.trials, o.seed);
  Outcome out;
  out.params = {{"graph", o.graph}, {"trials", o.trials}, {"seed", o.seed}};
  out.result = {{"generic_rank", rank},
                {"max_rank", 2 * static_cast<long long>(g.vertex_count()) - 3},
                {"dof", 2 * static_cast<long long>(g.vertex_count()) - 3 - rank}};
  return out;
}

Outcome cmd_system(const Options& o) {
  Graph g = resolve_graph(o.graph);
  Outcome out;
  out.params = {{"graph", o.graph}, {"model", o.model}, {"include_cm", o.include_cm}};
  if (o.model == "distance") {
    DistanceSystem sys = build_distance_system(g, o.include_cm);
    out.result = {{"variables", sys.vars->names()},
                  {"equations", polys_json(sys.equations)},
                  {"edge_equations", sys.edge_equations}};
    return out;
  }
  if (o.model != "coordinates") throw InputError("--model must be coordinates or distance");
  if (o.include_cm) throw InputError("--include-cm applies to --model distance only");
  Pinning pin = pinning_for(g, o);
  ConstraintSystem sys = build_unit_system(g, pin);
  LamanAudit audit = laman_variable_audit(sys);
  out.params["pin"] = {pin.origin_vertex, pin.axis_vertex};
  out.result = {{"variables", sys.vars->names()},
                {"equations", polys_json(sys.equations)},
                {"audit", {{"vars", audit.vars}, {"eqs", audit.eqs}, {"slack", audit.slack}}}};
  return out;
}

Outcome cmd_groebner(const Options& o) {
  VarTablePtr vars = read_vars(o);
  auto gens = read_polys(o, vars);
  MonomialOrder order = order_for(o.order, vars->size());
  GroebnerLimits limits = effective_limits(o);
  IdealBasis basis = buchberger(gens, order, BuchbergerOptions{limits, PairTieBreak::ascending_index});
  Outcome out;
  out.params = {{"vars", vars->names()}, {"generators", polys_json(gens)}, {"order", order.describe()},
                {"limits", limits_json(limits)}};
  out.result = {{"basis", polys_json(basis.generators)}, {"stats", stats_json(basis.stats)}};
  if (!o.member.empty()) {
    Polynomial f = parse(o.member, vars);
    Polynomial nf = normal_form(f, basis);
    out.params["member"] = format(f);
    out.result["normal_form"] = format(nf);
    out.result["member"] = nf.is_zero();
  }
  return out;
}

Outcome cmd_eliminate(const Options& o) {
  VarTablePtr vars = read_vars(o);
  auto gens = read_polys(o, vars);
  auto drop_list = split(o.drop, ',');
  if (drop_list.empty()) throw InputError("eliminate requires --drop v1,v2,...");
  std::set<std::string> drop(drop_list.begin(), drop_list.end());
  GroebnerLimits limits = effective_limits(o);
  IdealBasis basis = eliminate(gens, drop, limits);
  Outcome out;
  out.params = {{"vars", vars->names()}, {"generators", polys_json(gens)}, {"drop", drop},
                {"limits", limits_json(limits)}};
  out.result = {{"basis", polys_json(basis.generators)}, {"order", basis.order.describe()},
                {"stats", stats_json(basis.stats)}};
  return out;
}

Outcome cmd_verify(const Options& o) {
  VerifyMode mode;
  if (o.mode == "membership") {
    mode = VerifyMode::membership;
  } else if (o.mode == "factorization") {
    mode = VerifyMode::factorization;
  } else {
    throw InputError("--mode must be membership or factorization");
  }
  GroebnerLimits limits = effective_limits(o);
  VerificationReport r = verify_eq1(mode, limits);
  Outcome out;
  out.params = {{"mode", o.mode}};
  out.result = {{"holds", r.holds}, {"polynomial", r.polynomial}};
  if (mode == VerifyMode::membership) {
    out.params["limits"] = limits_json(limits);
    out.result["elimination_basis"] = r.elimination_basis;
    out.result["normal_form"] = r.normal_form;
    out.result["divisible_by_x2"] = r.divisible_by_x2;
    out.result["quotient_in_ideal"] = r.quotient_in_ideal;
  } else {
    out.result["expanded_product"] = r.expanded_product;
    out.result["difference"] = r.difference;
  }
  return out;
}

std::pair<ConstraintSystem, SolveResult> solve_from_options(const Options& o, Outcome& out) {
  Graph g = resolve_graph(o.graph);
  Pinning pin = pinning_for(g, o);
  ConstraintSystem sys = build_unit_system(g, pin);
  std::vector<double> start;
  if (!o.start.empty()) {
    start = parse_numbers<double>(o.start, "start");
    if (start.size() != sys.variable_count())
      throw InputError("--start needs " + std::to_string(sys.variable_count()) + " values");
  } else {
    start = random_start(sys.variable_count(), o.seed, 0);
  }
  SolveResult sol = newton_solve(sys, start, SolverOptions{o.tol, o.max_iter});
  out.params = {{"graph", o.graph}, {"pin", {pin.origin_vertex, pin.axis_vertex}}, {"seed", o.seed},
                {"start", start}, {"tol", o.tol}, {"max_iter", o.max_iter}};
  out.result = {{"converged", sol.converged}, {"residual", sol.residual}, {"iterations", sol.iterations},
                {"variables", sys.vars->names()}, {"values", sol.values}, {"config", config_json(sol.config)}};
  return {std::move(sys), std::move(sol)};
}

Outcome cmd_solve(const Options& o) {
  Outcome out;
  solve_from_options(o, out);
  return out;
}

Outcome cmd_dim(const Options& o) {
  Outcome out;
  auto [sys, sol] = solve_from_options(o, out);
  if (!sol.converged) throw std::runtime_error("solver did not converge; no local dimension");
  out.result["local_dimension"] = local_dimension(sys, sol);
  return out;
}

Outcome cmd_collapse(const Options& o) {
  std::string name = o.graph;
  if (name.rfind("builtin:", 0) == 0) name = name.substr(8);
  CollapseTarget target = collapse_target(name);
  CollapseReport r = collapse_experiment(target, o.attempts, o.seed, o.merge_tol, SolverOptions{o.tol, o.max_iter});
  Outcome out;
  json j = to_json(r);
  out.params = j["params"];
  out.params["graph"] = o.graph;
  j.erase("params");
  out.result = j;
  return out;
}

Outcome cmd_curve(const Options& o) {
  auto pts = sample_flatness_curve(o.x2, o.count);
  Outcome out;
  out.params = {{"x2", o.x2}, {"count", o.count}};
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({p.x, p.y});
  out.result = {{"points", arr}, {"point_count", pts.size()}};
  return out;
}

Outcome cmd_census(const Options& o) {
  PointSet ps;
  Outcome out;
  out.params = {{"eps", o.eps}};
  if (!o.points.empty()) {
    ps = load_point_set(o.points);
    out.params["points"] = o.points;
  } else {
    if (o.generator.empty()) throw InputError("census requires --points FILE or --generator");
    Generator g = parse_generator(o.generator);
    out.params["generator"] = o.generator;
    switch (g) {
      case Generator::lattice:
        ps = lattice_config(o.side, o.radius_sq);
        out.params["side"] = o.side;
        out.params["radius_sq"] = o.radius_sq;
        break;
      case Generator::lines:
        ps = lines_config(o.n, o.k, o.seed, o.integer_positions);
        out.params["n"] = o.n;
        out.params["k"] = o.k;
        out.params["seed"] = o.seed;
        out.params["integer_positions"] = o.integer_positions;
        break;
      case Generator::random:
        ps = random_config(o.n, o.seed);
        out.params["n"] = o.n;
        out.params["seed"] = o.seed;
        break;
    }
  }
  out.result = {{"n", ps.size()}, {"count", count_unit_pairs(ps, o.eps)}, {"duplicates", duplicate_count(ps)}};
  if (o.brute) out.result["brute_count"] = count_unit_pairs_brute(ps, o.eps);
  return out;
}

Outcome cmd_scaling(const Options& o) {
  if (o.generator.empty()) throw InputError("scaling requires --generator");
  Generator g = parse_generator(o.generator);
  auto sizes = parse_numbers<int>(o.sizes, "sizes");
  if (sizes.empty()) throw InputError("scaling requires --sizes a,b,c");
  ScalingParams params{o.radius_sq, o.k, o.integer_positions, o.eps};
  ScalingReport r = scaling_report(g, sizes, params, o.seed);
  Outcome out;
  json j = to_json(r);
  out.params = j["params"];
  out.params["generator"] = o.generator;
  out.params["sizes"] = sizes;
  out.result = {{"rows", j["rows"]}};
  if (j.contains("note")) out.result["note"] = j["note"];
  return out;
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string json_to_text(const json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rigidlab: unit-distance varieties, rigidity and census tools", "rigidlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("rigidlab ") + kVersion);

  Options o;
  using Handler = std::function<Outcome(const Options&)>;
  std::map<std::string, Handler> handlers;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--tol", o.tol, "solver tolerance");
    sub->add_option("--limit", o.limit, "maximum S-pairs for Groebner computations");
    sub->add_option("--limits", o.limits, "resource limits 'pairs=N,basis=M'");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", o.output, "write the report to FILE");
  };
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[name] = std::move(h);
    return sub;
  };

  auto* cm = add("cm", "Cayley-Menger determinant and Gram-rank check of a point file", cmd_cm);
  cm->add_option("--points", o.points, "point file")->required();
  cm->add_option("--subset", o.subset, "comma-separated 0-based point indices");
  cm->add_option("--dim", o.dim, "target dimension for the Gram check");
  cm->add_option("--gram-tol", o.gram_tol, "relative eigenvalue tolerance");

  auto* laman = add("laman", "Laman count and pebble-game check", cmd_laman);
  laman->add_option("--graph", o.graph, "graph JSON file or builtin:NAME");

  auto* rank = add("rank", "generic rigidity-matrix rank", cmd_rank);
  rank->add_option("--graph", o.graph, "graph JSON file or builtin:NAME");
  rank->add_option("--trials", o.trials, "random configurations to try")->check(CLI::PositiveNumber);

  auto* system = add("system", "pinned unit-distance polynomial system", cmd_system);
  system->add_option("--graph", o.graph, "graph JSON file or builtin:NAME");
  system->add_option("--pin", o.pin, "origin,axis vertex ids");
  system->add_option("--model", o.model, "coordinates or distance");
  system->add_flag("--include-cm", o.include_cm, "append Cayley-Menger generators (distance model)");

  for (auto [name, help, h] : {std::tuple{"groebner", "reduced Groebner basis", Handler(cmd_groebner)},
                               std::tuple{"eliminate", "elimination ideal", Handler(cmd_eliminate)}}) {
    auto* sub = add(name, help, h);
    sub->add_option("--polys", o.polys, "';'-separated polynomials");
    sub->add_option("--input", o.input, "file with one polynomial per line");
    sub->add_option("--vars", o.vars, "comma-separated variable names")->required();
    if (std::string(name) == "groebner") {
      sub->add_option("--order", o.order, "lex, grevlex or elim:K");
      sub->add_option("--member", o.member, "polynomial to test for membership");
    } else {
      sub->add_option("--drop", o.drop, "variables to eliminate")->required();
    }
  }

  auto* verify = add("verify-eq1", "check the flatness polynomial", cmd_verify);
  verify->add_option("--mode", o.mode, "membership or factorization");

  for (auto [name, help, h] : {std::tuple{"solve", "Newton solve of a pinned unit system", Handler(cmd_solve)},
                               std::tuple{"dim", "solve, then local dimension", Handler(cmd_dim)}}) {
    auto* sub = add(name, help, h);
    sub->add_option("--graph", o.graph, "graph JSON file or builtin:NAME");
    sub->add_option("--pin", o.pin, "origin,axis vertex ids");
    sub->add_option("--start", o.start, "comma-separated start point (default: random from --seed)");
    sub->add_option("--max-iter", o.max_iter, "Newton iteration cap");
  }

  auto* collapse = add("collapse", "K33/K44 collapse experiment", cmd_collapse);
  collapse->add_option("--graph", o.graph, "builtin:k33, builtin:k44 or builtin:triangle");
  collapse->add_option("--attempts", o.attempts, "random starts")->check(CLI::PositiveNumber);
  collapse->add_option("--merge-tol", o.merge_tol, "coincidence / collinearity tolerance");
  collapse->add_option("--max-iter", o.max_iter, "Newton iteration cap");

  auto* curve = add("curve", "sample the flatness curve for fixed x2", cmd_curve);
  curve->add_option("--x2", o.x2, "axis abscissa, 0 < |x2| < 2");
  curve->add_option("--count", o.count, "number of x3 grid values");

  auto* census = add("census", "count unit-distance pairs", cmd_census);
  census->add_option("--points", o.points, "point file");
  census->add_option("--generator", o.generator, "lattice, lines or random");
  census->add_option("--side", o.side, "lattice side");
  census->add_option("--radius-sq", o.radius_sq, "lattice squared radius");
  census->add_option("--n", o.n, "point count");
  census->add_option("--k", o.k, "line count");
  census->add_option("--eps", o.eps, "tolerance on squared distance");
  census->add_flag("--integer-positions", o.integer_positions, "deterministic lines variant");
  census->add_flag("--brute", o.brute, "also report the O(n^2) count");

  auto* scaling = add("scaling", "unit counts over a range of sizes", cmd_scaling);
  scaling->add_option("--generator", o.generator, "lattice, lines or random")->required();
  scaling->add_option("--sizes", o.sizes, "ascending sizes (lattice: sides)")->required();
  scaling->add_option("--radius-sq", o.radius_sq, "lattice squared radius");
  scaling->add_option("--k", o.k, "line count");
  scaling->add_option("--eps", o.eps, "tolerance on squared distance");
  scaling->add_flag("--integer-positions", o.integer_positions, "deterministic lines variant");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  const auto started = std::chrono::steady_clock::now();
  try {
    Outcome outcome = handlers.at(name)(o);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    json report = outcome.result;
    report["manifest"] = {{"subcommand", name},
                          {"params", outcome.params},
                          {"seed", o.seed},
                          {"version", kVersion},
                          {"wall_time", wall}};
    std::string body = o.format == "text" ? json_to_text(report) : report.dump(2) + "\n";
    if (!o.output.empty()) {
      std::ofstream file(o.output);
      if (!file) throw InputError("cannot write '" + o.output + "'");
      file << body;
    } else {
      out << body;
    }
    return kExitOk;
  } catch (const ResourceLimitError& e) {
    err << "rigidlab " << name << ": resource limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const InputError& e) {
    err << "rigidlab " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "rigidlab " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "rigidlab " << name << ": " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace rigidlab
