#include "rigidlab/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "rigidlab/errors.hpp"

namespace rigidlab {

namespace {

// Term list sorted descending under one fixed order; the working form for
// reduction so the leading term is always front().
using TermList = std::vector<Term>;

TermList to_ordered(const Polynomial& p, const MonomialOrder& order) {
  TermList t = p.terms();
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return t;
}

// h - c * m * g, all term lists descending under `order`
TermList sub_scaled(const TermList& h, std::size_t h_start, const Rational& c, const Monomial& m, const TermList& g,
                    const MonomialOrder& order) {
  TermList out;
  out.reserve(h.size() - h_start + g.size());
  std::size_t i = h_start, j = 0;
  while (i < h.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = (i == h.size()) ? -1 : order.compare(h[i].mono, gm);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), -c * g[j].coeff});
      ++j;
    } else {
      Rational v = h[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back(Term{std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

TermList reduce_full(TermList h, const std::vector<const TermList*>& divisors, const MonomialOrder& order) {
  TermList remainder;
  std::size_t start = 0;
  while (start < h.size()) {
    const Term& lt = h[start];
    const TermList* hit = nullptr;
    for (const TermList* d : divisors) {
      if (!d->empty() && d->front().mono.divides(lt.mono)) {
        hit = d;
        break;
      }
    }
    if (hit == nullptr) {
      remainder.push_back(lt);
      ++start;
      continue;
    }
    Rational c = lt.coeff / hit->front().coeff;
    Monomial m = lt.mono / hit->front().mono;
    h = sub_scaled(h, start, c, m, *hit, order);
    start = 0;
  }
  return remainder;
}

void make_monic(TermList& t) {
  if (t.empty()) return;
  Rational lc = t.front().coeff;
  for (auto& term : t) term.coeff /= lc;
}

Polynomial from_ordered(const VarTablePtr& vars, TermList t) { return Polynomial(vars, std::move(t)); }

TermList spoly_ordered(const TermList& f, const TermList& g, const MonomialOrder& order) {
  Monomial l = lcm(f.front().mono, g.front().mono);
  // (l / LT f) * f  -  (l / LT g) * g
  TermList scaled_f;
  scaled_f.reserve(f.size());
  Monomial mf = l / f.front().mono;
  for (const auto& t : f) scaled_f.push_back(Term{t.mono * mf, t.coeff / f.front().coeff});
  return sub_scaled(scaled_f, 0, 1 / g.front().coeff, l / g.front().mono, g, order);
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerLimits GroebnerLimits::parse(std::string_view text) { return parse(text, GroebnerLimits{}); }

GroebnerLimits GroebnerLimits::parse(std::string_view text, GroebnerLimits base) {
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("limit entry '" + item + "' is not key=value");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    std::size_t used = 0;
    unsigned long long n = 0;
    try {
      n = std::stoull(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size() || n == 0) throw InputError("bad limit value '" + value + "'");
    if (key == "pairs") {
      base.max_pairs = n;
    } else if (key == "basis") {
      base.max_basis = n;
    } else {
      throw InputError("unknown limit key '" + key + "'");
    }
  }
  return base;
}

GroebnerLimits GroebnerLimits::from_env() {
  const char* env = std::getenv("RIGIDLAB_LIMITS");
  if (env == nullptr || *env == '\0') return {};
  return parse(env);
}

bool IdealBasis::is_unit() const {
  return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero();
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  std::vector<TermList> ordered;
  ordered.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (!same_vars(d.vars(), f.vars())) throw std::invalid_argument("divisor over a different variable table");
    ordered.push_back(to_ordered(d, order));
  }
  std::vector<const TermList*> ptrs;
  for (const auto& d : ordered) ptrs.push_back(&d);
  return from_ordered(f.vars(), reduce_full(to_ordered(f, order), ptrs, order));
}

Polynomial normal_form(const Polynomial& f, const IdealBasis& basis) {
  return normal_form(f, basis.generators, basis.order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("S-polynomial of the zero polynomial");
  return from_ordered(f.vars(), spoly_ordered(to_ordered(f, order), to_ordered(g, order), order));
}

IdealBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, const BuchbergerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const VarTablePtr& vars = gens.front().vars();
  for (const auto& g : gens)
    if (!same_vars(g.vars(), vars)) throw std::invalid_argument("generators over different variable tables");

  BuchbergerStats stats;
  std::vector<TermList> basis;
  std::vector<CriticalPair> pairs;

  auto add_to_basis = [&](TermList p) {
    make_monic(p);
    std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) pairs.push_back(CriticalPair{i, k, lcm(basis[i].front().mono, p.front().mono)});
    basis.push_back(std::move(p));
    if (basis.size() > options.limits.max_basis)
      throw ResourceLimitError("Groebner basis exceeded " + std::to_string(options.limits.max_basis) + " polynomials");
  };

  bool unit = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    add_to_basis(to_ordered(g, order));
    if (g.is_constant()) unit = true;
  }

  auto pair_before = [&](const CriticalPair& a, const CriticalPair& b) {
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (options.tie_break == PairTieBreak::ascending_index) return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    return std::tie(a.i, a.j) > std::tie(b.i, b.j);
  };

  while (!unit && !pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_before);
    CriticalPair pair = std::move(*it);
    pairs.erase(it);

    if (++stats.pairs_considered > options.limits.max_pairs)
      throw ResourceLimitError("Buchberger exceeded " + std::to_string(options.limits.max_pairs) + " S-pairs");

    const TermList& f = basis[pair.i];
    const TermList& g = basis[pair.j];
    if (f.front().mono.coprime(g.front().mono)) {
      ++stats.pairs_skipped_coprime;
      continue;
    }
    ++stats.pairs_reduced;
    std::vector<const TermList*> ptrs;
    for (const auto& b : basis) ptrs.push_back(&b);
    TermList r = reduce_full(spoly_ordered(f, g, order), ptrs, order);
    if (r.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    if (r.front().mono.is_one()) unit = true;
    add_to_basis(std::move(r));
  }

  IdealBasis result{{}, order, true, stats};
  if (unit) {
    result.generators.push_back(Polynomial::constant(vars, 1));
    return result;
  }

  // minimal basis: drop elements whose leading monomial is a multiple of another's
  std::vector<TermList> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].front().mono;
      const Monomial& mj = basis[j].front().mono;
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // interreduce tails
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const TermList*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    TermList r = reduce_full(minimal[i], others, order);
    make_monic(r);
    minimal[i] = std::move(r);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const TermList& a, const TermList& b) { return order.compare(a.front().mono, b.front().mono) < 0; });
  for (auto& t : minimal) result.generators.push_back(from_ordered(vars, std::move(t)));
  return result;
}

bool ideal_membership(const Polynomial& f, std::span<const Polynomial> gens, const MonomialOrder& order,
                      const GroebnerLimits& limits) {
  IdealBasis basis = buchberger(gens, order, BuchbergerOptions{limits, PairTieBreak::ascending_index});
  return normal_form(f, basis).is_zero();
}

IdealBasis eliminate(std::span<const Polynomial> gens, const std::set<std::string>& drop,
                     const GroebnerLimits& limits) {
  if (gens.empty()) throw std::invalid_argument("eliminate needs at least one generator");
  const VarTable& vars = *gens.front().vars();
  std::vector<bool> mask(vars.size(), false);
  for (const auto& name : drop) mask[vars.require(name)] = true;

  MonomialOrder order = MonomialOrder::block_elimination(mask);
  IdealBasis full = buchberger(gens, order, BuchbergerOptions{limits, PairTieBreak::ascending_index});

  IdealBasis result{{}, order, true, full.stats};
  for (auto& g : full.generators) {
    bool uses_dropped = false;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i] && g.uses_variable(i)) uses_dropped = true;
    if (!uses_dropped) result.generators.push_back(std::move(g));
  }
  return result;
}

bool all_s_polynomials_reduce(const IdealBasis& basis) {
  const auto& g = basis.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j], basis.order), basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace rigidlab
