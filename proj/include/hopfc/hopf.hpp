#pragma once

// Hopf structures on PBW algebras and the axiom checks run against them.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfc/pbw.hpp"

namespace hopfc {

struct HopfPresentation {
  std::string name;
  std::shared_ptr<const Algebra> algebra;
  /// Delta(X_i), rank 2, one per generator.
  std::vector<TensorElement> coproduct;
  /// epsilon(X_i), one per generator.
  std::vector<Series> counit;
  std::optional<Element> casimir;

  const GeneratorSet& generators() const { return algebra->generators(); }
  const SpacePtr& space() const { return algebra->space(); }
  std::size_t size() const { return algebra->size(); }

  /// Throws StructuralError unless every table is present and lives in space().
  void validate() const;
};

/// Same presentation with every coefficient mapped into `target`.
HopfPresentation map_coefficients(const HopfPresentation& h, const SpacePtr& target,
                                  const std::function<Series(const Series&)>& f);

/// All deformation parameters set to zero.
HopfPresentation classical_limit(const HopfPresentation& h);

/// Delta extended multiplicatively, with a memo over monomials.
class CoproductMap {
 public:
  explicit CoproductMap(const HopfPresentation& h);

  TensorElement image(const Monomial& m) const;
  TensorElement apply(const Element& x) const;
  /// (Delta (x) id) or (id (x) Delta) of a rank-2 tensor.
  TensorElement apply_left(const TensorElement& t) const;
  TensorElement apply_right(const TensorElement& t) const;

 private:
  const HopfPresentation& h_;
  mutable std::map<Monomial, TensorElement> memo_;
};

TensorElement apply_coproduct(const HopfPresentation& h, const Element& x);

Series apply_counit(const HopfPresentation& h, const Monomial& m);
Series apply_counit(const HopfPresentation& h, const Element& x);
/// Applies the counit to one slot of a rank-2 tensor.
Element counit_slot(const HopfPresentation& h, const TensorElement& t, int slot);

/// An antipode given on generators, extended anti-multiplicatively.
class AntipodeMap {
 public:
  AntipodeMap(const Algebra& alg, std::vector<Element> images);

  const std::vector<Element>& images() const { return images_; }
  Element image(const Monomial& m) const;
  Element apply(const Element& x) const;

 private:
  const Algebra& alg_;
  std::vector<Element> images_;
  mutable std::map<Monomial, Element> memo_;
};

/// Fixed-point solution of m(S (x) id) Delta(X) = epsilon(X) 1 on generators.
/// Throws SynthesisError if the iteration does not stabilise.
std::vector<Element> solve_antipode(const HopfPresentation& h);

struct Residual {
  std::string label;
  std::string value;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<Residual> residuals;
  std::string details;
  double seconds = 0;

  void fail(std::string label, std::string value) {
    passed = false;
    residuals.push_back({std::move(label), std::move(value)});
  }
};

struct VerificationReport {
  std::string algebra;
  int order = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(std::string_view check) const;
};

CheckResult check_jacobi(const Algebra& alg);
CheckResult check_confluence(const Algebra& alg);
CheckResult check_relations_morphism(const HopfPresentation& h);
CheckResult check_coassociativity(const HopfPresentation& h);
CheckResult check_counit(const HopfPresentation& h);
CheckResult check_casimir_central(const HopfPresentation& h);
/// Synthesizes S, then checks both antipode axioms and that S reverses every relation.
CheckResult check_antipode(const HopfPresentation& h);

/// Jacobi, relations-morphism, coassociativity, counit, Casimir centrality
/// (when a Casimir is present) and antipode.
VerificationReport verify_all(const HopfPresentation& h);

}  // namespace hopfc
