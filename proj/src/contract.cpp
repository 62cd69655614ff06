#include "hopfc/contract.hpp"

#include <set>

#include "hopfc/catalog.hpp"
#include "hopfc/errors.hpp"

namespace hopfc {

Symbol eps_symbol(int floor, int cap) {
  Symbol e;
  e.name = std::string(kEps);
  e.weight = 0;
  e.floor = floor;
  e.cap = cap;
  return e;
}

// ---------------------------------------------------------------------------
// Classical layer

ScalingMap ScalingMap::standard(const SpacePtr& sp) {
  auto e = [&](int k, long num = 1, long den = 1) {
    return Series::symbol(sp, kEps, k, Rational(num, den));
  };
  enum { I = 0, Jp = 1, J3 = 2, Jm = 3 };
  enum { M = 0, Ap = 1, N = 2, Am = 3 };
  ScalingMap s;
  s.forward.resize(4);
  s.forward[M] = {{I, e(2)}};
  s.forward[Ap] = {{Jp, e(1)}};
  s.forward[N] = {{J3, e(0, 1, 2)}, {I, e(0, 1, 2)}};
  s.forward[Am] = {{Jm, e(1)}};
  s.inverse.resize(4);
  s.inverse[I] = {{M, e(-2)}};
  s.inverse[Jp] = {{Ap, e(-1)}};
  s.inverse[J3] = {{N, e(0, 2)}, {M, e(-2, -1)}};
  s.inverse[Jm] = {{Am, e(-1)}};
  return s;
}

namespace {

using LinearImages = std::vector<std::map<std::size_t, Series>>;

bool composes_to_identity(const LinearImages& outer, const LinearImages& inner) {
  for (std::size_t k = 0; k < outer.size(); ++k) {
    std::map<std::size_t, Series> acc;
    for (const auto& [i, c] : outer[k]) {
      for (const auto& [l, d] : inner.at(i)) {
        auto [it, fresh] = acc.try_emplace(l, c * d);
        if (!fresh) it->second += c * d;
      }
    }
    for (const auto& [l, v] : acc) {
      const bool diag = l == k;
      if (diag ? !(v == Series::constant(v.space(), 1)) : !v.is_zero()) return false;
    }
    if (!acc.count(k)) return false;
  }
  return true;
}

WedgeTensor wedge_image(const WedgeTensor& w, const LinearImages& inverse, const SymbolMap& sigma,
                        const SpacePtr& target) {
  WedgeTensor out(target);
  for (const auto& [k, c] : w.terms()) {
    const Series cc = substitute(c, sigma, target);
    if (cc.is_zero()) continue;
    for (const auto& [p, cp] : inverse.at(k.first)) {
      for (const auto& [q, cq] : inverse.at(k.second)) out.add(p, q, cc * cp * cq);
    }
  }
  return out;
}

bool wedge_finite(const WedgeTensor& w) {
  for (const auto& [k, c] : w.terms()) {
    if (!eps_finite(c)) return false;
  }
  return true;
}

constexpr int kScanLow = -8;
constexpr int kScanHigh = 8;
constexpr int kLieWindow = 40;

// Space holding the contracted parameters plus eps for the classical layer.
SpacePtr lie_target_space(const std::vector<std::string>& names) {
  std::vector<Symbol> syms;
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) continue;
    Symbol s;
    s.name = n;
    syms.push_back(s);
  }
  syms.push_back(eps_symbol(-kLieWindow, kLieWindow));
  return ParamSpace::make(std::move(syms), 2);
}

SymbolMap param_substitution(const WedgeTensor& r, const std::vector<ParamImage>& params,
                             const std::set<std::string>& active, const std::vector<int>& n,
                             const SpacePtr& target) {
  SymbolMap sigma;
  for (const auto& name : r.space()->names()) sigma.emplace(name, Series(target));
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& p = params[i];
    if (!active.count(p.old_param)) continue;
    sigma.insert_or_assign(p.old_param,
                           Series::symbol(target, kEps, n[i]) *
                               Series::symbol(target, p.target, 1, p.coeff));
  }
  return sigma;
}

}  // namespace

bool ScalingMap::round_trip() const {
  return composes_to_identity(forward, inverse) && composes_to_identity(inverse, forward);
}

WedgeTensor transform_r(const WedgeTensor& r, const ScalingMap& s, const SymbolMap& sigma,
                        const SpacePtr& target) {
  return wedge_image(r, s.inverse, sigma, target);
}

Cocommutator transform_delta(const Cocommutator& d, const ScalingMap& s, const SymbolMap& sigma,
                             const SpacePtr& target) {
  Cocommutator out;
  for (const auto& fk : s.forward) {
    WedgeTensor w(target);
    for (const auto& [i, c] : fk) w += wedge_image(d.at(i), s.inverse, sigma, target).scaled(c);
    out.push_back(std::move(w));
  }
  return out;
}

bool ExponentSolution::coboundary() const {
  for (const auto& e : entries) {
    if (e.r_min != e.delta_min) return false;
  }
  return true;
}

std::optional<int> ExponentSolution::r_min(std::string_view param) const {
  for (const auto& e : entries) {
    for (const auto& p : e.params) {
      if (p == param) return e.r_min;
    }
  }
  throw LookupError("no exponent entry for parameter '" + std::string(param) + "'");
}

std::optional<int> ExponentSolution::delta_min(std::string_view param) const {
  for (const auto& e : entries) {
    for (const auto& p : e.params) {
      if (p == param) return e.delta_min;
    }
  }
  throw LookupError("no exponent entry for parameter '" + std::string(param) + "'");
}

ExponentSolution solve_min_exponents(const LieStructure& lie, const WedgeTensor& r,
                                     const std::vector<ParamImage>& params, SolveMode mode) {
  ExponentSolution sol;
  sol.mode = mode;
  // Groups of parameter indices solved with one shared exponent.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<ParamImage> images = params;
  if (mode == SolveMode::independent) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      // A fresh contracted symbol per old parameter.
      images[i].target = "t_" + images[i].old_param;
      groups.push_back({i});
    }
  } else {
    std::map<std::string, std::size_t> by_target;
    for (std::size_t i = 0; i < images.size(); ++i) {
      auto [it, fresh] = by_target.try_emplace(images[i].target, groups.size());
      if (fresh) groups.emplace_back();
      groups[it->second].push_back(i);
    }
  }
  std::vector<std::string> targets;
  for (const auto& p : images) targets.push_back(p.target);
  const SpacePtr sp = lie_target_space(targets);
  const ScalingMap s = ScalingMap::standard(sp);
  const Cocommutator d = cocommutator_from_r(lie, r);

  for (const auto& g : groups) {
    ExponentEntry entry;
    std::set<std::string> active;
    for (auto i : g) {
      entry.params.push_back(images[i].old_param);
      active.insert(images[i].old_param);
    }
    entry.target = mode == SolveMode::correlated ? images[g.front()].target : "";
    auto scan = [&](auto&& transformed_is_finite, auto&& transformed_is_zero) -> std::optional<int> {
      std::vector<int> n(images.size(), 0);
      if (transformed_is_zero(n)) return std::nullopt;
      for (int k = kScanLow; k <= kScanHigh; ++k) {
        for (auto i : g) n[i] = k;
        if (transformed_is_finite(n)) return k;
      }
      return std::nullopt;
    };
    entry.r_min = scan(
        [&](const std::vector<int>& n) {
          return wedge_finite(transform_r(r, s, param_substitution(r, images, active, n, sp), sp));
        },
        [&](const std::vector<int>& n) {
          return transform_r(r, s, param_substitution(r, images, active, n, sp), sp).is_zero();
        });
    auto delta_of = [&](const std::vector<int>& n) {
      return transform_delta(d, s, param_substitution(r, images, active, n, sp), sp);
    };
    entry.delta_min = scan(
        [&](const std::vector<int>& n) {
          for (const auto& w : delta_of(n)) {
            if (!wedge_finite(w)) return false;
          }
          return true;
        },
        [&](const std::vector<int>& n) {
          for (const auto& w : delta_of(n)) {
            if (!w.is_zero()) return false;
          }
          return true;
        });
    sol.entries.push_back(std::move(entry));
  }
  return sol;
}

WedgeTensor contracted_r(const LieStructure& lie, const WedgeTensor& r,
                         const std::vector<ParamImage>& params) {
  (void)lie;
  std::vector<std::string> targets;
  std::set<std::string> active;
  std::vector<int> n;
  for (const auto& p : params) {
    targets.push_back(p.target);
    active.insert(p.old_param);
    n.push_back(p.exponent);
  }
  const SpacePtr sp = lie_target_space(targets);
  const WedgeTensor w =
      transform_r(r, ScalingMap::standard(sp), param_substitution(r, params, active, n, sp), sp);
  const SpacePtr limit_space = sp->without(kEps);
  return w.map_coefficients(limit_space, [&](const Series& c) { return eps_limit(c, limit_space); });
}

// ---------------------------------------------------------------------------
// Quantum layer

HopfPresentation induce_presentation(const HopfPresentation& host, std::string name,
                                     GeneratorSet gens, const std::vector<Element>& forward,
                                     const std::vector<Element>& inverse) {
  host.validate();
  if (forward.size() != gens.size() || inverse.size() != host.size()) {
    throw StructuralError("induced presentation needs one image per generator");
  }
  auto induced = std::make_shared<Algebra>(gens, host.space());
  auto host_alg = host.algebra;
  auto inv = std::make_shared<GeneratorMap>(*induced, inverse);
  induced->set_resolver([host_alg, inv, forward](std::size_t i, std::size_t j) {
    return inv->apply(host_alg->commutator(forward[i], forward[j]));
  });
  HopfPresentation out;
  out.name = std::move(name);
  CoproductMap delta(host);
  for (const auto& y : forward) {
    out.coproduct.push_back(inv->apply(delta.apply(y)));
    out.counit.push_back(apply_counit(host, y));
  }
  if (host.casimir) out.casimir = inv->apply(*host.casimir);
  // Freeze the table into a resolver-free copy.
  out.algebra = induced->map_coefficients(host.space(), [](const Series& c) { return c; });
  out.validate();
  return out;
}

namespace {

int eps_window(int order) { return 4 * order + 16; }

// Source presentation pushed into the contraction space, together with the
// generator maps and the eps-dependent copy of the target.
struct Contraction {
  HopfPresentation source;         // catalog, original space
  HopfPresentation host;           // parameters substituted, combined space
  SpacePtr target_space;           // contracted parameters only
  SpacePtr space;                  // contracted parameters + eps
  SymbolMap sigma;
  std::vector<Element> forward;    // new in host generators
  std::vector<Element> inverse;    // host generators in new
  GeneratorSet target_gens;
};

Series image_of_param(const Symbol& s, const ContractionCase& c, const SpacePtr& sp) {
  auto find = [&](const std::string& old) -> const ParamImage& {
    for (const auto& p : c.params) {
      if (p.old_param == old) return p;
    }
    throw StructuralError("case " + c.name + " has no image for parameter '" + old + "'");
  };
  if (!s.is_ratio()) {
    const auto& p = find(s.name);
    return Series::symbol(sp, kEps, p.exponent) * Series::symbol(sp, p.target, 1, p.coeff);
  }
  const auto& num = find(s.ratio_num);
  const auto& den = find(s.ratio_den);
  const Rational coeff = num.coeff / den.coeff;
  const Series e = Series::symbol(sp, kEps, num.exponent - den.exponent, coeff);
  if (num.target == den.target) return e;
  for (const auto& t : sp->symbols()) {
    if (t.ratio_num == num.target && t.ratio_den == den.target) {
      return e * Series::symbol(sp, t.name);
    }
  }
  throw StructuralError("no contracted ratio symbol for " + num.target + "/" + den.target);
}

Contraction prepare(const ContractionCase& c, const HopfPresentation& source, int order) {
  Contraction k;
  k.source = source;
  const HopfPresentation target = catalog::presentation(c.target, order);
  k.target_space = target.space();
  k.target_gens = target.generators();
  const int w = eps_window(order);
  k.space = ParamSpace::merge(*k.target_space, *ParamSpace::make({eps_symbol(-w, w)}, order));
  for (const auto& s : k.source.space()->symbols()) {
    k.sigma.emplace(s.name, image_of_param(s, c, k.space));
  }
  const SpacePtr sp = k.space;
  const SymbolMap& sigma = k.sigma;
  k.host = map_coefficients(k.source, sp, [&](const Series& x) { return substitute(x, sigma, sp); });

  // Classical generators (I, J+, J3, J-) in terms of the source generators,
  // and source generators in terms of classical ones.
  const Algebra& H = *k.host.algebra;
  const auto& g = H.generators();
  std::vector<Element> classical_in_source;
  std::vector<std::map<std::size_t, Series>> source_in_classical(4);
  const bool primed = g.index_of("J3'").has_value();
  Series kappa(sp);
  if (primed) kappa = sigma.at("kappa");
  for (std::size_t i = 0; i < 4; ++i) classical_in_source.push_back(H.gen(i));
  for (std::size_t i = 0; i < 4; ++i) source_in_classical[i] = {{i, Series::constant(sp, 1)}};
  if (primed) {
    // J3' = J3 - kappa J+
    classical_in_source[2] = H.gen(2) + H.gen(1).scaled(kappa);
    source_in_classical[2] = {{2, Series::constant(sp, 1)}, {1, -kappa}};
  }
  const ScalingMap s = ScalingMap::standard(sp);
  for (const auto& fk : s.forward) {
    Element y(sp);
    for (const auto& [i, cf] : fk) y += classical_in_source[i].scaled(cf);
    k.forward.push_back(std::move(y));
  }
  for (const auto& si : source_in_classical) {
    Element x(sp);
    for (const auto& [i, ci] : si) {
      for (const auto& [l, cl] : s.inverse[i]) {
        x += Element::monomial(sp, Monomial::gen(l), ci * cl);
      }
    }
    k.inverse.push_back(std::move(x));
  }
  return k;
}

Element counterterm(const Algebra& src, Counterterm kind) {
  const Element i = src.gen(0);
  if (kind == Counterterm::central_square) return src.mul(i, i);
  // sinh(a I/2)/(a/2) = I sinh_over_arg(a I/2)
  const Element sh =
      src.mul(i, src.function(Analytic::sinh_over_arg, i.scaled(src.param("a").scaled(Rational(1, 2)))));
  return src.mul(sh, sh);
}

template <class F>
auto guarded(const ContractionCase& c, F&& body) {
  try {
    return body();
  } catch (const FloorError& e) {
    throw DivergenceError("contraction " + c.name + " leaves the eps window: " + e.what(),
                          {e.what()});
  }
}

Series limit_coefficient(const Series& x, const SpacePtr& target) { return eps_limit(x, target); }

Element casimir_from(const Contraction& k, const ContractionCase& c, const Algebra& induced) {
  if (!k.source.casimir) throw StructuralError("source " + c.source + " has no casimir");
  const SpacePtr sp = k.space;
  const SymbolMap& sigma = k.sigma;
  auto push = [&](const Element& x) {
    return x.map_coefficients(sp, [&](const Series& s) { return substitute(s, sigma, sp); });
  };
  Element total = push(*k.source.casimir).scaled(c.casimir.alpha) +
                  push(counterterm(*k.source.algebra, c.casimir.counterterm)).scaled(c.casimir.beta);
  GeneratorMap inv(induced, k.inverse);
  const Element scaled = inv.apply(total).scaled(Series::symbol(sp, kEps, c.casimir.eps_power));
  return scaled.map_coefficients(k.target_space,
                                 [&](const Series& s) { return limit_coefficient(s, k.target_space); });
}

HopfPresentation induced_target(const Contraction& k, const ContractionCase& c) {
  HopfPresentation bare = k.host;
  bare.casimir = std::nullopt;
  return induce_presentation(bare, c.target, k.target_gens, k.forward, k.inverse);
}

}  // namespace

HopfPresentation contract_hopf(const ContractionCase& c, int order) {
  return contract_hopf(c, catalog::presentation(c.source, order), order);
}

HopfPresentation contract_hopf(const ContractionCase& c, const HopfPresentation& source, int order) {
  return guarded(c, [&] {
    const Contraction k = prepare(c, source, order);
    const HopfPresentation t = induced_target(k, c);
    HopfPresentation out = map_coefficients(
        t, k.target_space, [&](const Series& s) { return limit_coefficient(s, k.target_space); });
    out.name = "contract(" + c.name + ")";
    out.casimir = casimir_from(k, c, *t.algebra);
    out.validate();
    return out;
  });
}

Element contract_casimir(const ContractionCase& c, int order) {
  return guarded(c, [&] {
    const Contraction k = prepare(c, catalog::presentation(c.source, order), order);
    return casimir_from(k, c, *induced_target(k, c).algebra);
  });
}

namespace {

template <class T, class F>
std::optional<T> try_rebase(F&& f, std::string& why) {
  try {
    return f();
  } catch (const StructuralError& e) {
    why = e.what();
    return std::nullopt;
  }
}

}  // namespace

CheckResult match_presentation(const HopfPresentation& got, const HopfPresentation& want) {
  CheckResult r;
  r.name = "match:" + want.name;
  const auto& g = want.generators();
  if (got.generators().names() != g.names()) {
    r.fail("generators", "generator names differ");
    return r;
  }
  const SpacePtr sp = want.space();
  auto to_want = [&](const Series& s) { return rebase(s, sp); };
  std::string why;
  for (std::size_t i = 0; i < want.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::string label = "[" + g.name(i) + ", " + g.name(j) + "]";
      auto x = try_rebase<Element>(
          [&] { return got.algebra->rewrite(i, j).map_coefficients(sp, to_want); }, why);
      if (!x) {
        r.fail(label, why);
        continue;
      }
      const Element diff = *x - want.algebra->rewrite(i, j);
      if (!diff.is_zero()) r.fail(label, diff.str(g));
    }
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    const std::string label = "Delta(" + g.name(i) + ")";
    auto x = try_rebase<TensorElement>(
        [&] { return got.coproduct.at(i).map_coefficients(sp, to_want); }, why);
    if (!x) {
      r.fail(label, why);
      continue;
    }
    const TensorElement diff = *x - want.coproduct.at(i);
    if (!diff.is_zero()) r.fail(label, diff.str(g));
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    auto x = try_rebase<Series>([&] { return rebase(got.counit.at(i), sp); }, why);
    const std::string label = "eps(" + g.name(i) + ")";
    if (!x) {
      r.fail(label, why);
    } else if (!(*x - want.counit.at(i)).is_zero()) {
      r.fail(label, (*x - want.counit.at(i)).str());
    }
  }
  if (want.casimir) {
    if (!got.casimir) {
      r.fail("casimir", "missing");
    } else {
      auto x = try_rebase<Element>([&] { return got.casimir->map_coefficients(sp, to_want); }, why);
      if (!x) {
        r.fail("casimir", why);
      } else {
        const Element diff = *x - *want.casimir;
        if (!diff.is_zero()) r.fail("casimir", diff.str(g));
      }
    }
  }
  return r;
}

HopfPresentation change_of_basis(const HopfPresentation& h, const std::vector<Element>& forward,
                                 const std::vector<Element>& inverse) {
  h.validate();
  // Old generators recovered from the new ones, computed inside h.
  GeneratorMap fwd(*h.algebra, forward);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(fwd.apply(inverse.at(i)) == h.algebra->gen(i))) {
      throw NonInvertibleError("change of basis: inverse image of " + h.generators().name(i) +
                               " does not map back");
    }
  }
  HopfPresentation out =
      induce_presentation(h, h.name + "'", h.generators(), forward, inverse);
  GeneratorMap inv(*out.algebra, inverse);
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (!(inv.apply(forward[k]) == out.algebra->gen(k))) {
      throw NonInvertibleError("change of basis: " + h.generators().name(k) +
                               "' does not map back");
    }
  }
  return out;
}

}  // namespace hopfc
