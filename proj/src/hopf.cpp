#include "hopfc/hopf.hpp"

#include <chrono>

#include "hopfc/errors.hpp"

namespace hopfc {

void HopfPresentation::validate() const {
  if (!algebra) throw StructuralError("presentation '" + name + "' has no algebra");
  const std::size_t n = algebra->size();
  if (coproduct.size() != n) throw StructuralError("coproduct table size mismatch in " + name);
  if (counit.size() != n) throw StructuralError("counit table size mismatch in " + name);
  for (const auto& d : coproduct) {
    if (d.rank() != 2 || !same_space(d.space(), space())) {
      throw StructuralError("coproduct entry outside the algebra space in " + name);
    }
  }
  for (const auto& c : counit) {
    if (!same_space(c.space(), space())) throw StructuralError("counit outside space in " + name);
  }
  if (casimir && !same_space(casimir->space(), space())) {
    throw StructuralError("casimir outside space in " + name);
  }
}

HopfPresentation map_coefficients(const HopfPresentation& h, const SpacePtr& target,
                                  const std::function<Series(const Series&)>& f) {
  HopfPresentation out;
  out.name = h.name;
  out.algebra = h.algebra->map_coefficients(target, f);
  for (const auto& d : h.coproduct) out.coproduct.push_back(d.map_coefficients(target, f));
  for (const auto& c : h.counit) out.counit.push_back(f(c));
  if (h.casimir) out.casimir = h.casimir->map_coefficients(target, f);
  return out;
}

HopfPresentation classical_limit(const HopfPresentation& h) {
  auto target = ParamSpace::make({}, h.space()->order());
  return map_coefficients(h, target, [&](const Series& c) {
    return Series::constant(target, c.constant_term());
  });
}

// ---------------------------------------------------------------------------
// Coproduct and counit

CoproductMap::CoproductMap(const HopfPresentation& h) : h_(h) { h_.validate(); }

TensorElement CoproductMap::image(const Monomial& m) const {
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  const Algebra& A = *h_.algebra;
  TensorElement out(A.space(), 2);
  if (m.is_unit()) {
    out = TensorElement::pure(A.one(), A.one());
  } else {
    const std::size_t f = m.first();
    Monomial rest = m;
    --rest.e[f];
    out = A.tensor_mul(h_.coproduct.at(f), image(rest));
  }
  return memo_.emplace(m, std::move(out)).first->second;
}

TensorElement CoproductMap::apply(const Element& x) const {
  TensorElement out(h_.space(), 2);
  for (const auto& [m, c] : x.terms()) out += image(m).scaled(c);
  return out;
}

TensorElement CoproductMap::apply_left(const TensorElement& t) const {
  TensorElement out(h_.space(), 3);
  for (const auto& [k, c] : t.terms()) {
    const TensorElement d = image(k[0]);
    for (const auto& [dk, cd] : d.terms()) out.add({dk[0], dk[1], k[1]}, c * cd);
  }
  return out;
}

TensorElement CoproductMap::apply_right(const TensorElement& t) const {
  TensorElement out(h_.space(), 3);
  for (const auto& [k, c] : t.terms()) {
    const TensorElement d = image(k[1]);
    for (const auto& [dk, cd] : d.terms()) out.add({k[0], dk[0], dk[1]}, c * cd);
  }
  return out;
}

TensorElement apply_coproduct(const HopfPresentation& h, const Element& x) {
  return CoproductMap(h).apply(x);
}

Series apply_counit(const HopfPresentation& h, const Monomial& m) {
  Series out = Series::constant(h.space(), 1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (int k = 0; k < m.e[i]; ++k) out *= h.counit.at(i);
  }
  return out;
}

Series apply_counit(const HopfPresentation& h, const Element& x) {
  Series out(h.space());
  for (const auto& [m, c] : x.terms()) out += c * apply_counit(h, m);
  return out;
}

Element counit_slot(const HopfPresentation& h, const TensorElement& t, int slot) {
  if (t.rank() != 2 || (slot != 0 && slot != 1)) throw StructuralError("bad counit slot");
  Element out(h.space());
  for (const auto& [k, c] : t.terms()) out.add(k[1 - slot], c * apply_counit(h, k[slot]));
  return out;
}

// ---------------------------------------------------------------------------
// Antipode

AntipodeMap::AntipodeMap(const Algebra& alg, std::vector<Element> images)
    : alg_(alg), images_(std::move(images)) {}

Element AntipodeMap::image(const Monomial& m) const {
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  Element out(alg_.space());
  if (m.is_unit()) {
    out = alg_.one();
  } else {
    // S(X_f m') = S(m') S(X_f)
    const std::size_t f = m.first();
    Monomial rest = m;
    --rest.e[f];
    out = alg_.mul(image(rest), images_.at(f));
  }
  return memo_.emplace(m, std::move(out)).first->second;
}

Element AntipodeMap::apply(const Element& x) const {
  Element out(alg_.space());
  for (const auto& [m, c] : x.terms()) out += image(m).scaled(c);
  return out;
}

namespace {

// m(S (x) id)(t)
Element left_convolve(const Algebra& A, const AntipodeMap& s, const TensorElement& t) {
  Element out(A.space());
  for (const auto& [k, c] : t.terms()) {
    out += A.mul(s.image(k[0]), Element::monomial(A.space(), k[1], c));
  }
  return out;
}

// m(id (x) S)(t)
Element right_convolve(const Algebra& A, const AntipodeMap& s, const TensorElement& t) {
  Element out(A.space());
  for (const auto& [k, c] : t.terms()) {
    out += A.mul(Element::monomial(A.space(), k[0], c), s.image(k[1]));
  }
  return out;
}

}  // namespace

std::vector<Element> solve_antipode(const HopfPresentation& h) {
  h.validate();
  const Algebra& A = *h.algebra;
  const std::size_t n = A.size();
  // Delta(X) - X (x) 1 - 1 (x) X carries strictly positive parameter weight
  // for every catalog generator, so each sweep fixes one more order.
  std::vector<TensorElement> rest;
  for (std::size_t i = 0; i < n; ++i) {
    rest.push_back(h.coproduct[i] - TensorElement::pure(A.gen(i), A.one()) -
                   TensorElement::pure(A.one(), A.gen(i)));
  }
  std::vector<Element> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(A.constant(h.counit[i]) - A.gen(i));
  const int limit = A.space()->order() + 3;
  for (int sweep = 0; sweep < limit; ++sweep) {
    AntipodeMap cur(A, s);
    std::vector<Element> next;
    for (std::size_t i = 0; i < n; ++i) {
      next.push_back(A.constant(h.counit[i]) - A.gen(i) - left_convolve(A, cur, rest[i]));
    }
    if (next == s) return s;
    s = std::move(next);
  }
  throw SynthesisError("antipode iteration for " + h.name + " did not stabilise after " +
                       std::to_string(limit) + " sweeps");
}

// ---------------------------------------------------------------------------
// Checks

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const CheckResult* VerificationReport::find(std::string_view check) const {
  for (const auto& c : checks) {
    if (c.name == check) return &c;
  }
  return nullptr;
}

namespace {

template <class F>
CheckResult timed(std::string name, F&& body) {
  CheckResult r;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string pair_label(const GeneratorSet& g, std::size_t i, std::size_t j) {
  return "[" + g.name(i) + ", " + g.name(j) + "]";
}

}  // namespace

CheckResult check_jacobi(const Algebra& A) {
  return timed("jacobi", [&](CheckResult& r) {
    const auto& g = A.generators();
    for (std::size_t i = 0; i < A.size(); ++i) {
      for (std::size_t j = i + 1; j < A.size(); ++j) {
        for (std::size_t k = j + 1; k < A.size(); ++k) {
          const Element x = A.gen(i), y = A.gen(j), z = A.gen(k);
          const Element res = A.commutator(A.commutator(x, y), z) +
                              A.commutator(A.commutator(y, z), x) +
                              A.commutator(A.commutator(z, x), y);
          if (!res.is_zero()) {
            r.fail(g.name(i) + ", " + g.name(j) + ", " + g.name(k), res.str(g));
          }
        }
      }
    }
  });
}

CheckResult check_confluence(const Algebra& A) {
  return timed("confluence", [&](CheckResult& r) {
    const auto& g = A.generators();
    for (std::size_t k = 0; k < A.size(); ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          const Word w{k, j, i};
          const Element res = A.normal_form(w, 0) - A.normal_form(w, 1);
          if (!res.is_zero()) r.fail(g.name(k) + " " + g.name(j) + " " + g.name(i), res.str(g));
        }
      }
    }
  });
}

CheckResult check_relations_morphism(const HopfPresentation& h) {
  return timed("relations_morphism", [&](CheckResult& r) {
    const Algebra& A = *h.algebra;
    CoproductMap delta(h);
    for (std::size_t i = 0; i < A.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const TensorElement lhs = A.tensor_mul(h.coproduct[i], h.coproduct[j]) -
                                  A.tensor_mul(h.coproduct[j], h.coproduct[i]);
        const TensorElement res = lhs - delta.apply(A.rewrite(i, j));
        if (!res.is_zero()) r.fail(pair_label(h.generators(), i, j), res.str(h.generators()));
      }
    }
  });
}

CheckResult check_coassociativity(const HopfPresentation& h) {
  return timed("coassociativity", [&](CheckResult& r) {
    CoproductMap delta(h);
    for (std::size_t i = 0; i < h.size(); ++i) {
      const TensorElement res =
          delta.apply_left(h.coproduct[i]) - delta.apply_right(h.coproduct[i]);
      if (!res.is_zero()) r.fail(h.generators().name(i), res.str(h.generators()));
    }
  });
}

CheckResult check_counit(const HopfPresentation& h) {
  return timed("counit", [&](CheckResult& r) {
    const Algebra& A = *h.algebra;
    const auto& g = h.generators();
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Element x = A.gen(i);
      const Element left = counit_slot(h, h.coproduct[i], 0) - x;
      const Element right = counit_slot(h, h.coproduct[i], 1) - x;
      if (!left.is_zero()) r.fail("(eps x id) " + g.name(i), left.str(g));
      if (!right.is_zero()) r.fail("(id x eps) " + g.name(i), right.str(g));
    }
    // The counit must also kill every relation.
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const Series res = apply_counit(h, A.rewrite(i, j));
        if (!res.is_zero()) r.fail("eps" + pair_label(g, i, j), res.str());
      }
    }
  });
}

CheckResult check_casimir_central(const HopfPresentation& h) {
  return timed("casimir_central", [&](CheckResult& r) {
    if (!h.casimir) {
      r.details = "no casimir";
      return;
    }
    const Algebra& A = *h.algebra;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Element res = A.commutator(*h.casimir, A.gen(i));
      if (!res.is_zero()) r.fail(h.generators().name(i), res.str(h.generators()));
    }
  });
}

CheckResult check_antipode(const HopfPresentation& h) {
  return timed("antipode", [&](CheckResult& r) {
    const Algebra& A = *h.algebra;
    const auto& g = h.generators();
    std::vector<Element> images;
    try {
      images = solve_antipode(h);
    } catch (const SynthesisError& e) {
      r.fail("synthesis", e.what());
      return;
    }
    AntipodeMap s(A, images);
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Element unit = A.constant(h.counit[i]);
      const Element left = left_convolve(A, s, h.coproduct[i]) - unit;
      const Element right = right_convolve(A, s, h.coproduct[i]) - unit;
      if (!left.is_zero()) r.fail("m(S x id)D " + g.name(i), left.str(g));
      if (!right.is_zero()) r.fail("m(id x S)D " + g.name(i), right.str(g));
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const Element res = A.commutator(images[j], images[i]) - s.apply(A.rewrite(i, j));
        if (!res.is_zero()) r.fail("S" + pair_label(g, i, j), res.str(g));
      }
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!r.details.empty()) r.details += "; ";
      r.details += "S(" + g.name(i) + ") = " + images[i].str(g);
    }
  });
}

VerificationReport verify_all(const HopfPresentation& h) {
  h.validate();
  VerificationReport rep;
  rep.algebra = h.name;
  rep.order = h.space()->order();
  rep.checks.push_back(check_jacobi(*h.algebra));
  rep.checks.push_back(check_relations_morphism(h));
  rep.checks.push_back(check_coassociativity(h));
  rep.checks.push_back(check_counit(h));
  if (h.casimir) rep.checks.push_back(check_casimir_central(h));
  rep.checks.push_back(check_antipode(h));
  return rep;
}

}  // namespace hopfc
