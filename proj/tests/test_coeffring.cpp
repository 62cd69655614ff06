#include <gtest/gtest.h>

#include <random>

#include "hopfc/errors.hpp"
#include "hopfc/series.hpp"

using namespace hopfc;

namespace {

SpacePtr eps_space(int order) {
  Symbol xi;
  xi.name = "xi";
  Symbol th;
  th.name = "theta";
  Symbol e;
  e.name = std::string(kEps);
  e.weight = 0;
  e.floor = -4;
  e.cap = order + 4;
  return ParamSpace::make({xi, th, e}, order);
}

Series random_series(const SpacePtr& sp, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> expo(0, 3);
  std::vector<Series::Term> terms;
  for (int k = 0; k < 6; ++k) {
    Exponents e{};
    for (std::size_t i = 0; i < sp->size(); ++i) e[i] = static_cast<std::int8_t>(expo(rng));
    terms.emplace_back(e, Rational(coef(rng), 1 + expo(rng)));
  }
  return Series::from_terms(sp, terms);
}

// Taylor coefficients computed by repeated integration of the defining ODEs,
// independently of the engine's own table.
std::vector<Rational> oracle_exp(int n) {
  std::vector<Rational> c(n);
  c[0] = 1;
  for (int k = 1; k < n; ++k) c[k] = c[k - 1] / Rational(k);
  return c;
}

}  // namespace

TEST(Rational, Canonical) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational::parse("1/x"), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Series, AdditiveCancellation) {
  auto sp = ParamSpace::plain({"a"}, 3);
  Series one = Series::constant(sp, 1);
  Series a = Series::symbol(sp, "a");
  EXPECT_EQ((one + a) + (-a), one);
  EXPECT_EQ(a.scaled(Rational(1, 2)) + a.scaled(Rational(1, 2)), a);
  Series e = analytic_series(Analytic::expm1_over_arg, a);
  EXPECT_TRUE((e + (-e)).is_zero());
}

TEST(Series, ValuationCancellation) {
  auto sp = eps_space(4);
  Series lo = Series::symbol(sp, kEps, -2);
  Series hi = Series::symbol(sp, kEps, 2);
  EXPECT_EQ(lo * hi, Series::constant(sp, 1));
}

TEST(Series, RatioSymbolNumericCrossCheck) {
  // a_plus = kappa * a; evaluate both sides at a = 1/3, kappa = 3/5.
  Symbol a;
  a.name = "a";
  Symbol k;
  k.name = "kappa";
  k.weight = 0;
  k.ratio_num = "a_plus";
  k.ratio_den = "a";
  auto sp = ParamSpace::make({a, k}, 3);
  Series prod = Series::symbol(sp, "kappa") * Series::symbol(sp, "a");
  ASSERT_EQ(prod.size(), 1u);
  const auto& [e, c] = prod.terms().front();
  Rational value = c * pow(Rational(1, 3), e[0]) * pow(Rational(3, 5), e[1]);
  EXPECT_EQ(value, Rational(1, 5));
}

TEST(Series, TruncatedProduct) {
  auto sp = ParamSpace::plain({"a"}, 3);
  Series a = Series::symbol(sp, "a");
  Series f = Series::constant(sp, 1) + a.scaled(Rational(1, 2)) + a.pow(2).scaled(Rational(1, 6));
  Series want = a + a.pow(2).scaled(Rational(1, 2)) + a.pow(3).scaled(Rational(1, 6));
  EXPECT_EQ(f * a, want);
  EXPECT_TRUE(a.pow(4).is_zero());
}

TEST(Series, FloorViolation) {
  auto sp = eps_space(4);
  Series lo = Series::symbol(sp, kEps, -3);
  EXPECT_THROW(lo * lo, FloorError);
}

TEST(Series, MismatchedSpaces) {
  auto a = ParamSpace::plain({"a"}, 3);
  auto b = ParamSpace::plain({"b"}, 3);
  EXPECT_THROW(Series::symbol(a, "a") + Series::symbol(b, "b"), StructuralError);
}

TEST(Series, SubstituteContractionMaps) {
  auto src = ParamSpace::plain({"a", "b_plus", "a_plus"}, 4);
  Symbol xi;
  xi.name = "xi";
  Symbol bp;
  bp.name = "beta_plus";
  Symbol ap;
  ap.name = "alpha_plus";
  Symbol e;
  e.name = std::string(kEps);
  e.weight = 0;
  e.floor = -4;
  e.cap = 8;
  auto dst = ParamSpace::make({xi, bp, ap, e}, 4);
  SymbolMap sigma;
  sigma.emplace("a", Series::symbol(dst, kEps, 2) * Series::symbol(dst, "xi", 1, -1));
  sigma.emplace("b_plus", Series::symbol(dst, kEps, 3) * Series::symbol(dst, "beta_plus", 1, 2));
  sigma.emplace("a_plus", Series::symbol(dst, kEps, 1) * Series::symbol(dst, "alpha_plus"));
  EXPECT_EQ(substitute(Series::symbol(src, "a"), sigma, dst), sigma.at("a"));
  EXPECT_EQ(substitute(Series::symbol(src, "b_plus"), sigma, dst), sigma.at("b_plus"));
  EXPECT_EQ(substitute(Series::symbol(src, "a_plus"), sigma, dst), sigma.at("a_plus"));
}

TEST(Series, SubstituteIsRingMorphism) {
  auto src = ParamSpace::plain({"a", "b"}, 4);
  auto dst = eps_space(4);
  SymbolMap sigma;
  sigma.emplace("a", Series::symbol(dst, kEps, 2) * Series::symbol(dst, "xi", 1, -1));
  sigma.emplace("b", Series::symbol(dst, "theta") + Series::symbol(dst, "xi", 2));
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    Series x = random_series(src, rng);
    Series y = random_series(src, rng);
    EXPECT_EQ(substitute(x * y, sigma, dst), substitute(x, sigma, dst) * substitute(y, sigma, dst));
  }
}

TEST(Series, EpsLimit) {
  auto sp = eps_space(4);
  Series th = Series::symbol(sp, "theta");
  Series x = th + Series::symbol(sp, kEps, 2) * Series::symbol(sp, "xi");
  Series lim = eps_limit(x);
  EXPECT_FALSE(lim.space()->has(kEps));
  EXPECT_EQ(lim, Series::symbol(lim.space(), "theta"));
  EXPECT_THROW(eps_limit(Series::symbol(sp, kEps, -2) * Series::symbol(sp, "xi")),
               DivergenceError);
  const int n = 2;
  Series y = Series::symbol(sp, kEps, n - 2) * th;
  EXPECT_EQ(eps_limit(y), Series::symbol(lim.space(), "theta"));
}

TEST(Series, EpsLimitOfShiftedProduct) {
  auto sp = eps_space(4);
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    Series x = random_series(sp, rng);
    Series y = random_series(sp, rng);
    for (int k = 0; k <= 2; ++k) {
      Series lhs = (Series::symbol(sp, kEps, k) * x) * (Series::symbol(sp, kEps, -k) * y);
      EXPECT_EQ(eps_limit(lhs), eps_limit(x * y));
    }
  }
}

TEST(Series, RingAxioms) {
  auto sp = ParamSpace::plain({"a", "b", "c"}, 4);
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    Series x = random_series(sp, rng);
    Series y = random_series(sp, rng);
    Series z = random_series(sp, rng);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x + y) + z, x + (y + z));
  }
}

TEST(Analytic, TaylorOracles) {
  auto sp = ParamSpace::plain({"a"}, 2);
  Series a = Series::symbol(sp, "a");
  Series one = Series::constant(sp, 1);
  EXPECT_EQ(analytic_series(Analytic::exp, a), one + a + a.pow(2).scaled(Rational(1, 2)));
  EXPECT_EQ(analytic_series(Analytic::expm1_over_arg, a),
            one + a.scaled(Rational(1, 2)) + a.pow(2).scaled(Rational(1, 6)));
  EXPECT_EQ(analytic_series(Analytic::sinh_over_arg, a), one + a.pow(2).scaled(Rational(1, 6)));
}

TEST(Analytic, CoefficientsAgainstExpOracle) {
  const int n = 12;
  auto e = oracle_exp(n);
  auto sh = taylor_coefficients(Analytic::sinh_over_arg, n);
  auto em = taylor_coefficients(Analytic::expm1_over_arg, n);
  auto ch = taylor_coefficients(Analytic::cosh, n);
  auto cm = taylor_coefficients(Analytic::cosh_minus_one, n);
  auto cq = taylor_coefficients(Analytic::cosh_minus_one_over_sq, n);
  for (int k = 0; k < n; ++k) {
    EXPECT_EQ(taylor_coefficients(Analytic::exp, n)[k], e[k]);
    EXPECT_EQ(ch[k], k % 2 ? Rational(0) : e[k]);
    EXPECT_EQ(cm[k], (k % 2 || k == 0) ? Rational(0) : e[k]);
    if (k + 1 < n) EXPECT_EQ(em[k], e[k + 1]);
    if (k + 1 < n) EXPECT_EQ(sh[k], k % 2 ? Rational(0) : e[k + 1]);
    if (k + 2 < n) EXPECT_EQ(cq[k], k % 2 ? Rational(0) : e[k + 2]);
  }
}

TEST(Analytic, ArgCothTimesSinhIsCosh) {
  // x coth x * sinh(x)/x = cosh x
  const int n = 12;
  auto ac = taylor_coefficients(Analytic::arg_coth, n);
  auto sh = taylor_coefficients(Analytic::sinh_over_arg, n);
  auto ch = taylor_coefficients(Analytic::cosh, n);
  for (int k = 0; k < n; ++k) {
    Rational s = 0;
    for (int j = 0; j <= k; ++j) s += ac[j] * sh[k - j];
    EXPECT_EQ(s, ch[k]) << "k=" << k;
  }
}

TEST(Analytic, ExpIsAdditive) {
  auto sp = ParamSpace::plain({"a", "b"}, 5);
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    Series x = random_series(sp, rng);
    Series y = random_series(sp, rng);
    x -= Series::constant(sp, x.constant_term());
    y -= Series::constant(sp, y.constant_term());
    EXPECT_EQ(analytic_series(Analytic::exp, x + y),
              analytic_series(Analytic::exp, x) * analytic_series(Analytic::exp, y));
  }
}

TEST(Analytic, WeightZeroArgumentRejected) {
  auto sp = eps_space(3);
  EXPECT_THROW(analytic_series(Analytic::exp, Series::symbol(sp, kEps)), NonTruncatableError);
  EXPECT_THROW(analytic_series(Analytic::exp, Series::constant(sp, 1)), NonTruncatableError);
}
