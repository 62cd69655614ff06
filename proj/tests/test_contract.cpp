#include <gtest/gtest.h>

#include "hopfc/catalog.hpp"
#include "hopfc/contract.hpp"
#include "hopfc/errors.hpp"

using namespace hopfc;

namespace {

std::string residuals(const CheckResult& r) {
  std::string out;
  for (const auto& x : r.residuals) out += x.label + ": " + x.value + "\n";
  return out;
}

SpacePtr eps_only(int order) { return ParamSpace::make({eps_symbol(-6, 6)}, order); }

int min_of(const ExponentSolution& s, const char* p) { return s.r_min(p).value(); }

}  // namespace

TEST(Scaling, StandardMapRoundTrips) {
  EXPECT_TRUE(ScalingMap::standard(eps_only(2)).round_trip());
}

TEST(Scaling, BrokenInverseIsDetected) {
  ScalingMap s = ScalingMap::standard(eps_only(2));
  s.inverse[2].begin()->second = Series::constant(s.inverse[2].begin()->second.space(), 3);
  EXPECT_FALSE(s.round_trip());
}

TEST(Scaling, ClassicalBracketsContractToH4) {
  // With no parameters the classical r is zero and the brackets of the new
  // generators are those of h4 as eps -> 0; checked through the quantum layer.
  const HopfPresentation h = contract_hopf(catalog::find_case("classical"), 2);
  EXPECT_TRUE(match_presentation(h, catalog::presentation("h4.classical", 2)).passed);
}

TEST(Solver, MinimalExponents) {
  const LieStructure L = gl2_lie();
  auto solve = [&](const char* name) {
    const ContractionCase c = catalog::find_case(name);
    return solve_min_exponents(L, catalog::classical_r(c.source), c.params,
                               c.correlated ? SolveMode::correlated : SolveMode::independent);
  };
  const auto s1 = solve("II.standard");
  EXPECT_EQ(min_of(s1, "a"), 2);
  EXPECT_EQ(min_of(s1, "b"), 2);
  const auto s2 = solve("II.nonstandard");
  EXPECT_EQ(min_of(s2, "b_plus"), 3);
  EXPECT_EQ(min_of(s2, "b"), 2);
  const auto s3 = solve("Iplus.standard");
  EXPECT_EQ(min_of(s3, "a_plus"), 3);
  EXPECT_EQ(min_of(s3, "a"), 2);
  const auto s4 = solve("Iplus.nonstandard");
  ASSERT_EQ(s4.entries.size(), 1u);
  EXPECT_EQ(min_of(s4, "a_plus"), 1);
  EXPECT_EQ(min_of(s4, "b_plus"), 1);
  for (const auto* s : {&s1, &s2, &s3, &s4}) EXPECT_TRUE(s->coboundary());
}

TEST(Solver, CorrelatedCaseNeedsMoreWhenSolvedTermwise) {
  const ContractionCase c = catalog::find_case("Iplus.nonstandard");
  const auto s = solve_min_exponents(gl2_lie(), catalog::classical_r(c.source), c.params,
                                     SolveMode::independent);
  EXPECT_EQ(min_of(s, "a_plus"), 3);
  EXPECT_EQ(min_of(s, "b_plus"), 3);
  EXPECT_TRUE(s.coboundary());
}

TEST(Solver, ParameterAbsentFromRIsUnconstrained) {
  const ContractionCase c = catalog::find_case("II.standard");
  std::vector<ParamImage> params = c.params;
  params.push_back({"b_plus", Rational(1), 0, "beta_plus"});
  const auto s = solve_min_exponents(gl2_lie(), catalog::classical_r(c.source), params,
                                     SolveMode::independent);
  EXPECT_FALSE(s.r_min("b_plus").has_value());
  EXPECT_THROW(s.r_min("nope"), LookupError);
}

TEST(ContractedR, ValuesForAllCases) {
  const LieStructure L = gl2_lie(), H = h4_lie();
  const GeneratorSet& g = H.generators();
  auto contracted = [&](const char* name) {
    const ContractionCase c = catalog::find_case(name);
    return contracted_r(L, catalog::classical_r(c.source), c.params).str(g);
  };
  EXPECT_EQ(contracted("II.standard"), "-theta*M^N + xi*A+^A-");
  EXPECT_EQ(contracted("II.nonstandard"), "-beta_plus*M^A+ - theta*M^N");
  EXPECT_EQ(contracted("Iplus.standard"), "-beta_plus*M^A+ + xi*A+^A-");
  // alpha_plus N ^ A+
  EXPECT_EQ(contracted("Iplus.nonstandard"), "-alpha_plus*A+^N");
}

TEST(ContractedR, CocommutatorCommutesWithTheLimit) {
  // delta of the contracted r in h4 equals the eps -> 0 limit of the transformed delta.
  const LieStructure L = gl2_lie(), H = h4_lie();
  for (const auto& c : catalog::list_cases()) {
    const WedgeTensor r = catalog::classical_r(c.source);
    const WedgeTensor rc = contracted_r(L, r, c.params);
    const Cocommutator dc = cocommutator_from_r(H, rc);
    EXPECT_TRUE(cocycle_residuals(H, dc).empty()) << c.name;
    EXPECT_TRUE(cojacobi_residuals(H, dc).empty()) << c.name;
  }
}

TEST(ContractedR, ForcedLowerExponentDiverges) {
  const LieStructure L = gl2_lie();
  for (const auto& c0 : catalog::list_cases()) {
    ContractionCase c = c0;
    for (auto& p : c.params) p.exponent -= 1;
    EXPECT_THROW(contracted_r(L, catalog::classical_r(c.source), c.params), DivergenceError)
        << c.name;
  }
}

class Contractions : public ::testing::TestWithParam<std::string> {};

TEST_P(Contractions, MatchTargetAtOrderFour) {
  const ContractionCase c = catalog::find_case(GetParam());
  const HopfPresentation got = contract_hopf(c, 4);
  const CheckResult m = match_presentation(got, catalog::presentation(c.target, 4));
  EXPECT_TRUE(m.passed) << residuals(m);
}

TEST_P(Contractions, ContractedAlgebraPassesTheAxioms) {
  const ContractionCase c = catalog::find_case(GetParam());
  EXPECT_TRUE(verify_all(contract_hopf(c, 3)).passed());
}

TEST_P(Contractions, CasimirAloneMatches) {
  const ContractionCase c = catalog::find_case(GetParam());
  const HopfPresentation want = catalog::presentation(c.target, 3);
  const Element got = contract_casimir(c, 3);
  EXPECT_EQ(got.map_coefficients(want.space(), [&](const Series& s) { return rebase(s, want.space()); }),
            *want.casimir);
}

TEST_P(Contractions, ClassicalLimitCommutesWithContraction) {
  const ContractionCase c = catalog::find_case(GetParam());
  const HopfPresentation lim = classical_limit(contract_hopf(c, 3));
  const HopfPresentation classical = contract_hopf(catalog::find_case("classical"), 3);
  EXPECT_TRUE(match_presentation(lim, classical).passed);
}

TEST_P(Contractions, EachExponentOneBelowDiverges) {
  const ContractionCase c0 = catalog::find_case(GetParam());
  if (c0.correlated) {
    ContractionCase c = c0;
    for (auto& p : c.params) p.exponent -= 1;
    EXPECT_THROW(contract_hopf(c, 3), DivergenceError);
    return;
  }
  for (std::size_t i = 0; i < c0.params.size(); ++i) {
    ContractionCase c = c0;
    c.params[i].exponent -= 1;
    EXPECT_THROW(contract_hopf(c, 3), DivergenceError) << c.params[i].old_param;
  }
}

INSTANTIATE_TEST_SUITE_P(Cases, Contractions,
                         ::testing::Values("II.standard", "II.nonstandard", "Iplus.standard",
                                           "Iplus.nonstandard"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s) {
                             if (ch == '.') ch = '_';
                           }
                           return s;
                         });

TEST(Contraction, HigherExponentTrivializesTheDeformation) {
  ContractionCase c = catalog::find_case("II.standard");
  c.params[0].exponent = 3;
  const HopfPresentation got = contract_hopf(c, 3);
  EXPECT_FALSE(match_presentation(got, catalog::presentation(c.target, 3)).passed);
}

TEST(Contraction, WrongTargetMismatches) {
  const HopfPresentation got = contract_hopf(catalog::find_case("II.standard"), 3);
  const CheckResult m = match_presentation(got, catalog::presentation("h4.betaplus.theta", 3));
  EXPECT_FALSE(m.passed);
  EXPECT_FALSE(m.residuals.empty());
}

TEST(Contraction, RatioImages) {
  // kappa = a_plus/a -> (2 eps^3 beta_plus)/(-eps^2 xi) = -2 eps mu
  const ContractionCase c = catalog::find_case("Iplus.standard");
  const HopfPresentation got = contract_hopf(c, 3);
  EXPECT_EQ(got.space()->names(), catalog::presentation("h4.betaplus.xi", 3).space()->names());
}

TEST(BasisChange, PrimedBasisRecoversXiOnly) {
  const ContractionCase c = catalog::find_case("Iplus.standard");
  for (int order : {3, 4}) {
    const HopfPresentation target = catalog::presentation(c.target, order);
    const auto b = catalog::primed_basis(target);
    const HopfPresentation changed = change_of_basis(contract_hopf(c, order), b.forward, b.inverse);
    const CheckResult m = match_presentation(changed, catalog::presentation("h4.xi", order));
    EXPECT_TRUE(m.passed) << residuals(m);
  }
}

TEST(BasisChange, CatalogEntryItselfChangesToXi) {
  const HopfPresentation h = catalog::presentation("h4.betaplus.xi", 4);
  const auto b = catalog::primed_basis(h);
  EXPECT_TRUE(match_presentation(change_of_basis(h, b.forward, b.inverse),
                                 catalog::presentation("h4.xi", 4))
                  .passed);
}

TEST(BasisChange, BadInverseIsRejected) {
  const HopfPresentation h = catalog::presentation("h4.betaplus.xi", 3);
  auto b = catalog::primed_basis(h);
  b.inverse[2] = h.algebra->gen("N");
  EXPECT_THROW(change_of_basis(h, b.forward, b.inverse), NonInvertibleError);
}

TEST(Match, RebaseFailureIsAMismatch) {
  // h4.xi.theta carries theta, which h4.xi has no slot for.
  const CheckResult m =
      match_presentation(catalog::presentation("h4.xi.theta", 2), catalog::presentation("h4.xi", 2));
  EXPECT_FALSE(m.passed);
}

TEST(Match, IdenticalPresentationsMatch) {
  for (const auto& name : catalog::presentation_names()) {
    EXPECT_TRUE(match_presentation(catalog::presentation(name, 2), catalog::presentation(name, 2)).passed)
        << name;
  }
}

TEST(Cases, Lookup) {
  EXPECT_EQ(catalog::list_cases().size(), 4u);
  EXPECT_EQ(catalog::find_case("classical").source, "gl2.classical");
  EXPECT_THROW(catalog::find_case("bogus"), LookupError);
}
