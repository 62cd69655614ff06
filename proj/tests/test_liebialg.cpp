#include <gtest/gtest.h>

#include <array>

#include "hopfc/catalog.hpp"
#include "hopfc/liebialg.hpp"
#include "hopfc/rmat.hpp"

using namespace hopfc;

namespace {

const std::vector<std::string> kDeformed{"gl2.Iplus.standard", "gl2.Iplus.nonstandard",
                                          "gl2.II.standard", "gl2.II.nonstandard"};

// 2x2 and 4x4 matrices over series, independent of the library's Matrix type.
using M4 = std::array<std::array<Series, 4>, 4>;

M4 zero4(const SpacePtr& sp) {
  M4 m{{{Series(sp), Series(sp), Series(sp), Series(sp)},
        {Series(sp), Series(sp), Series(sp), Series(sp)},
        {Series(sp), Series(sp), Series(sp), Series(sp)},
        {Series(sp), Series(sp), Series(sp), Series(sp)}}};
  return m;
}

M4 kron2(const std::array<Rational, 4>& x, const std::array<Rational, 4>& y, const Series& c) {
  M4 m = zero4(c.space());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m[2 * i + k][2 * j + l] = c.scaled(x[2 * i + j] * y[2 * k + l]);
  return m;
}

void add(M4& a, const M4& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] += b[i][j];
}

M4 mul(const M4& a, const M4& b) {
  M4 c = zero4(a[0][0].space());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Wedge tensor evaluated entry by entry in the fundamental representation.
M4 rep(const WedgeTensor& w, const Rep2& r) {
  M4 m = zero4(w.space());
  for (const auto& [k, c] : w.terms()) {
    add(m, kron2(r[k.first], r[k.second], c));
    add(m, kron2(r[k.second], r[k.first], -c));
  }
  return m;
}

}  // namespace

TEST(Lie, JacobiForBothAlgebras) {
  for (const auto& L : {gl2_lie(), h4_lie()}) {
    const SpacePtr sp = ParamSpace::make({}, 1);
    for (std::size_t x = 0; x < L.size(); ++x)
      for (std::size_t y = 0; y < L.size(); ++y)
        for (std::size_t z = 0; z < L.size(); ++z) {
          // [x,[y,z]] + cyclic, as a vector
          std::map<std::size_t, Rational> acc;
          auto cyc = [&](std::size_t a, std::size_t b, std::size_t c) {
            for (const auto& [m, v] : L.bracket(b, c))
              for (const auto& [n, u] : L.bracket(a, m)) acc[n] += v * u;
          };
          cyc(x, y, z);
          cyc(y, z, x);
          cyc(z, x, y);
          for (const auto& [n, v] : acc) EXPECT_TRUE(v.is_zero());
        }
  }
}

TEST(Wedge, AntisymmetryAndCancellation) {
  const SpacePtr sp = catalog::lie_space();
  WedgeTensor w(sp);
  const Series a = Series::symbol(sp, "a");
  w.add(2, 1, a);
  EXPECT_EQ(w.coefficient(1, 2), -a);
  EXPECT_EQ(w.coefficient(2, 1), a);
  w.add(1, 2, a);
  EXPECT_TRUE(w.is_zero());
  w.add(3, 3, a);
  EXPECT_TRUE(w.is_zero());
}

TEST(Cocommutator, MatchesBruteForceInTheFundamental) {
  // delta(X) = [rho(X) (x) 1 + 1 (x) rho(X), rho(r)] computed with plain 4x4 matrices.
  const LieStructure L = gl2_lie();
  const Rep2 r2 = gl2_fundamental();
  const std::array<Rational, 4> id{Rational(1), Rational(0), Rational(0), Rational(1)};
  for (const auto& name : kDeformed) {
    const WedgeTensor r = catalog::classical_r(name);
    const SpacePtr sp = r.space();
    const Series one = Series::constant(sp, 1);
    const Cocommutator d = cocommutator_from_r(L, r);
    const M4 rr = rep(r, r2);
    for (std::size_t x = 0; x < L.size(); ++x) {
      M4 dx = kron2(r2[x], id, one);
      add(dx, kron2(id, r2[x], one));
      M4 want = mul(dx, rr);
      M4 back = mul(rr, dx);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) want[i][j] -= back[i][j];
      const M4 got = rep(d[x], r2);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_EQ(got[i][j], want[i][j]) << name << " X=" << x;
    }
  }
}

TEST(Cocommutator, KnownValuesForTypeIINonStandard) {
  // r = -1/2 (b J3 - b_plus J+) ^ I: I is central so only J3, J+ and J- move.
  const LieStructure L = gl2_lie();
  const WedgeTensor r = catalog::classical_r("gl2.II.nonstandard");
  const SpacePtr sp = r.space();
  const Cocommutator d = cocommutator_from_r(L, r);
  EXPECT_TRUE(d[0].is_zero());
  // delta(J+) = ad_{J+}(-1/2 b J3 ^ I) = b J+ ^ I
  WedgeTensor want(sp);
  want.add(1, 0, Series::symbol(sp, "b"));
  EXPECT_EQ(d[1], want);
  // delta(J3) = ad_{J3}(1/2 b_plus J+ ^ I) = b_plus J+ ^ I
  WedgeTensor want3(sp);
  want3.add(1, 0, Series::symbol(sp, "b_plus"));
  EXPECT_EQ(d[2], want3);
}

TEST(Cocommutator, CocycleAndCoJacobiHoldForCatalogR) {
  const LieStructure L = gl2_lie();
  for (const auto& name : kDeformed) {
    const Cocommutator d = cocommutator_from_r(L, catalog::classical_r(name));
    EXPECT_TRUE(cocycle_residuals(L, d).empty()) << name;
    EXPECT_TRUE(cojacobi_residuals(L, d).empty()) << name;
  }
}

TEST(Cocommutator, NonCoboundaryPerturbationBreaksCoJacobi) {
  const LieStructure L = gl2_lie();
  Cocommutator d = cocommutator_from_r(L, catalog::classical_r("gl2.Iplus.nonstandard"));
  d[2].add(1, 3, Series::symbol(d[2].space(), "a_plus"));
  EXPECT_FALSE(cocycle_residuals(L, d).empty());
}

TEST(Schouten, NonStandardAreTriangular) {
  const LieStructure L = gl2_lie();
  EXPECT_TRUE(schouten_bracket(L, catalog::classical_r("gl2.Iplus.nonstandard")).is_zero());
  EXPECT_TRUE(schouten_bracket(L, catalog::classical_r("gl2.II.nonstandard")).is_zero());
}

TEST(Schouten, StandardAreNonzeroAndAdInvariant) {
  const LieStructure L = gl2_lie();
  for (const char* name : {"gl2.Iplus.standard", "gl2.II.standard"}) {
    const Tensor3 s = schouten_bracket(L, catalog::classical_r(name));
    EXPECT_FALSE(s.is_zero()) << name;
    EXPECT_TRUE(is_ad_invariant(L, s)) << name;
  }
}

TEST(Schouten, StandardValueForTypeII) {
  // -a J+ ^ J- alone: [[r, r]] = a^2 times the invariant element built from
  // the sl(2) structure constants; the J3 ^ I part is central and drops out.
  const LieStructure L = gl2_lie();
  const WedgeTensor r = catalog::classical_r("gl2.II.standard");
  WedgeTensor only(r.space());
  only.add(1, 3, -Series::symbol(r.space(), "a"));
  EXPECT_TRUE(schouten_bracket(L, r).terms() == schouten_bracket(L, only).terms());
}

TEST(AdAction, VectorFormAgreesWithGeneratorForm) {
  const LieStructure L = gl2_lie();
  const WedgeTensor r = catalog::classical_r("gl2.Iplus.standard");
  LieVector x{{1, Rational(2)}, {2, Rational(-3)}};
  WedgeTensor want = ad_action(L, 1, r).scaled(Series::constant(r.space(), 2));
  want -= ad_action(L, 2, r).scaled(Series::constant(r.space(), 3));
  EXPECT_EQ(ad_action(L, x, r), want);
}
