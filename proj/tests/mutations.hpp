#pragma once

// Single-term or single-sign edits of catalog data, shared by the unit tests
// and the acceptance binary. Each mutation reports the checks it trips.

#include <functional>
#include <string>
#include <vector>

#include "hopfc/catalog.hpp"
#include "hopfc/contract.hpp"
#include "hopfc/errors.hpp"
#include "hopfc/liebialg.hpp"
#include "hopfc/rmat.hpp"

namespace hopfc::mutation {

struct Mutation {
  std::string name;
  std::function<std::vector<std::string>()> tripped;
};

inline void collect(const VerificationReport& v, std::vector<std::string>& out) {
  for (const auto& c : v.checks) {
    if (!c.passed) out.push_back(c.name);
  }
}

inline std::shared_ptr<Algebra> copy_table(const HopfPresentation& h) {
  return std::make_shared<Algebra>(*h.algebra);
}

inline std::string case_for_source(const std::string& source) {
  for (const auto& c : catalog::list_cases()) {
    if (c.source == source) return c.name;
  }
  return "";
}

inline std::string case_for_target(const std::string& target) {
  for (const auto& c : catalog::list_cases()) {
    if (c.target == target) return c.name;
  }
  return "";
}

/// verify_all plus, where the algebra takes part in a contraction, the match.
inline std::vector<std::string> run_checks(const HopfPresentation& h, const std::string& entry,
                                           int order) {
  std::vector<std::string> out;
  collect(verify_all(h), out);
  if (auto name = case_for_source(entry); !name.empty()) {
    const ContractionCase c = catalog::find_case(name);
    try {
      if (!match_presentation(contract_hopf(c, h, order), catalog::presentation(c.target, order))
               .passed) {
        out.push_back("contraction match");
      }
    } catch (const Error&) {
      out.push_back("contraction");
    }
  }
  if (auto name = case_for_target(entry); !name.empty()) {
    const ContractionCase c = catalog::find_case(name);
    if (!match_presentation(contract_hopf(c, order), h).passed) out.push_back("contraction match");
  }
  return out;
}

inline std::vector<Mutation> mutation_suite(int order = 3) {
  std::vector<Mutation> m;
  const auto half = Rational(1, 2);

  m.push_back({"II.standard: sign of b in Delta(J+)", [=] {
                 HopfPresentation h = catalog::presentation("gl2.II.standard", order);
                 const Algebra& A = *h.algebra;
                 const Element i = A.gen("I"), jp = A.gen("J+"), j3 = A.gen("J3");
                 const Element up = (j3.scaled(A.param("a")) + i.scaled(A.param("b"))).scaled(half);
                 h.coproduct[1] = TensorElement::pure(A.function(Analytic::exp, up), jp) +
                                  TensorElement::pure(jp, A.function(Analytic::exp, -up));
                 return run_checks(h, "gl2.II.standard", order);
               }});

  m.push_back({"II.standard: counit of I set to 1", [=] {
                 HopfPresentation h = catalog::presentation("gl2.II.standard", order);
                 h.counit[0] = Series::constant(h.space(), 1);
                 return run_checks(h, "gl2.II.standard", order);
               }});

  m.push_back({"Iplus.standard: kappa^2 J+^2 dropped from the Casimir", [=] {
                 HopfPresentation h = catalog::presentation("gl2.Iplus.standard", order);
                 const Algebra& A = *h.algebra;
                 const Element jp = A.gen("J+");
                 *h.casimir -= A.mul(jp, jp).scaled(A.param("kappa", 2));
                 return run_checks(h, "gl2.Iplus.standard", order);
               }});

  m.push_back({"II.standard: sign of the a^2 term in [J+, J-]", [=] {
                 HopfPresentation h = catalog::presentation("gl2.II.standard", order);
                 auto A = copy_table(h);
                 const Element j3 = A->gen("J3");
                 // sinh(aJ3)/a with the a^2 J3^3/6 term negated
                 A->set_commutator("J+", "J-",
                                   -A->rewrite(3, 1) -
                                       A->pow(j3, 3).scaled(A->param("a", 2).scaled(Rational(1, 3))));
                 h.algebra = A;
                 return run_checks(h, "gl2.II.standard", order);
               }});

  m.push_back({"Iplus.nonstandard: sign of lambda in Delta(J3)", [=] {
                 HopfPresentation h = catalog::presentation("gl2.Iplus.nonstandard", order);
                 const Algebra& A = *h.algebra;
                 const Element i = A.gen("I");
                 const Element e = A.function(Analytic::exp, A.gen("J+").scaled(A.param("a_plus")));
                 h.coproduct[2] +=
                     TensorElement::pure(i, e - A.one()).scaled(A.param("lambda").scaled(Rational(2)));
                 return run_checks(h, "gl2.Iplus.nonstandard", order);
               }});

  m.push_back({"II.nonstandard: sign of the b_plus^2 term in Delta(J-)", [=] {
                 HopfPresentation h = catalog::presentation("gl2.II.nonstandard", order);
                 const Algebra& A = *h.algebra;
                 const Element i = A.gen("I");
                 const Element bi = i.scaled(A.param("b"));
                 const Element t = A.mul({i, i, A.function(Analytic::cosh_minus_one_over_sq, bi)});
                 // the term enters as -(b_plus^2/2) J+ (x) t; add it twice to flip it
                 h.coproduct[3] += TensorElement::pure(A.gen("J+"), t).scaled(A.param("b_plus", 2));
                 return run_checks(h, "gl2.II.nonstandard", order);
               }});

  m.push_back({"h4.alphaplus: [A-, A+] = M exp(-alpha_plus A+)", [=] {
                 HopfPresentation h = catalog::presentation("h4.alphaplus", order);
                 auto A = copy_table(h);
                 A->set_commutator(
                     "A-", "A+",
                     A->mul(A->gen("M"),
                            A->function(Analytic::exp, -A->gen("A+").scaled(A->param("alpha_plus")))));
                 h.algebra = A;
                 return run_checks(h, "h4.alphaplus", order);
               }});

  m.push_back({"h4.xi.theta: sign of theta in Delta(A-)", [=] {
                 HopfPresentation h = catalog::presentation("h4.xi.theta", order);
                 const Algebra& A = *h.algebra;
                 const Element dn =
                     A.gen("M").scaled((-A.param("theta") - A.param("xi")).scaled(half));
                 h.coproduct[3] = TensorElement::pure(A.function(Analytic::exp, -dn), A.gen("A-")) +
                                  TensorElement::pure(A.gen("A-"), A.function(Analytic::exp, dn));
                 return run_checks(h, "h4.xi.theta", order);
               }});

  m.push_back({"h4.betaplus.theta: sign of beta_plus in Delta(N)", [=] {
                 HopfPresentation h = catalog::presentation("h4.betaplus.theta", order);
                 const TensorElement prim = TensorElement::pure(h.algebra->one(), h.algebra->gen("N")) +
                                            TensorElement::pure(h.algebra->gen("N"), h.algebra->one());
                 // Delta(N) = prim + beta_plus * X  ->  prim - beta_plus * X
                 h.coproduct[2] = prim.scaled(Series::constant(h.space(), 2)) - h.coproduct[2];
                 return run_checks(h, "h4.betaplus.theta", order);
               }});

  m.push_back({"h4.betaplus.xi: sign of the correction in [N, A-]", [=] {
                 HopfPresentation h = catalog::presentation("h4.betaplus.xi", order);
                 auto A = copy_table(h);
                 // [A-, N] = A- - mu corr, so [N, A-] = -A- - mu corr is R - 2 A-
                 A->set_commutator("N", "A-", A->rewrite(3, 2) - A->gen("A-").scaled(Rational(2)));
                 h.algebra = A;
                 return run_checks(h, "h4.betaplus.xi", order);
               }});

  m.push_back({"h4.xi.theta: sign of A+A- + A-A+ in the Casimir", [=] {
                 HopfPresentation h = catalog::presentation("h4.xi.theta", order);
                 const Algebra& A = *h.algebra;
                 const Element sym = A.mul(A.gen("A+"), A.gen("A-")) + A.mul(A.gen("A-"), A.gen("A+"));
                 *h.casimir += sym.scaled(Rational(2));
                 return run_checks(h, "h4.xi.theta", order);
               }});

  m.push_back({"Iplus.standard: sign of kappa in [J3', J-]", [=] {
                 HopfPresentation h = catalog::presentation("gl2.Iplus.standard", order);
                 auto A = copy_table(h);
                 const Element j3 = A->gen("J3'");
                 const Series a = A->param("a"), k = A->param("kappa");
                 const Element sh_half = A->mul(
                     j3, A->function(Analytic::sinh_over_arg, j3.scaled(a.scaled(half))));
                 A->set_commutator("J3'", "J-",
                                   A->gen("J-").scaled(Rational(-2)) + sh_half.scaled(k) -
                                       A->gen("J+").scaled(k * k));
                 h.algebra = A;
                 return run_checks(h, "gl2.Iplus.standard", order);
               }});

  m.push_back({"R-matrix: entry 1 - q^2 replaced by 1 + q^2", [=] {
                 RMat R = printed_rmatrix("gl2.Iplus.standard", order);
                 R(1, 2) = Series::constant(R.space(), 2) - R(1, 2);
                 std::vector<std::string> out;
                 if (!qybe_residual(R).is_zero()) out.push_back("qybe");
                 return out;
               }});

  m.push_back({"II.standard: cocommutator of J+ perturbed by a J+ ^ J-", [=] {
                 const LieStructure L = gl2_lie();
                 Cocommutator d = cocommutator_from_r(L, catalog::classical_r("gl2.II.standard"));
                 d[1].add(1, 3, Series::symbol(d[1].space(), "a"));
                 std::vector<std::string> out;
                 if (!cocycle_residuals(L, d).empty()) out.push_back("cocycle");
                 if (!cojacobi_residuals(L, d).empty()) out.push_back("co-Jacobi");
                 return out;
               }});
  return m;
}

}  // namespace hopfc::mutation
