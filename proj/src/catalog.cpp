#include "hopfc/catalog.hpp"

#include <functional>

#include "hopfc/errors.hpp"

namespace hopfc::catalog {

namespace {

Symbol plain_symbol(std::string name) {
  Symbol s;
  s.name = std::move(name);
  return s;
}

Symbol ratio_symbol(std::string name, std::string num, std::string den) {
  Symbol s;
  s.name = std::move(name);
  s.weight = 0;
  s.ratio_num = std::move(num);
  s.ratio_den = std::move(den);
  return s;
}

// Small helper bundling an algebra under construction with shorthand.
struct Builder {
  std::shared_ptr<Algebra> A;
  HopfPresentation h;

  Builder(std::string name, std::vector<std::string> gens, std::size_t central, SpacePtr sp) {
    std::vector<bool> flags(gens.size(), false);
    flags.at(central) = true;
    A = std::make_shared<Algebra>(GeneratorSet(std::move(gens), flags), std::move(sp));
    h.name = std::move(name);
  }

  Element g(std::string_view n) const { return A->gen(n); }
  Series p(std::string_view n, int k = 1) const { return A->param(n, k); }
  Series q(long num, long den = 1) const { return A->scalar(Rational(num, den)); }
  Element c(const Series& s) const { return A->constant(s); }
  Element one() const { return A->one(); }
  Element f(Analytic kind, const Element& arg) const { return A->function(kind, arg); }
  Element mul(std::initializer_list<Element> xs) const { return A->mul(xs); }
  TensorElement t(const Element& x, const Element& y) const { return TensorElement::pure(x, y); }
  TensorElement prim(std::string_view n) const { return t(one(), g(n)) + t(g(n), one()); }

  void rel(std::string_view x, std::string_view y, const Element& rhs) {
    A->set_commutator(x, y, rhs);
  }

  HopfPresentation done(std::vector<TensorElement> delta, const Element& casimir) {
    h.algebra = A;
    h.coproduct = std::move(delta);
    h.counit.assign(A->size(), Series(A->space()));
    h.casimir = casimir;
    h.validate();
    return h;
  }
};

const std::vector<std::string> kGl2{"I", "J+", "J3", "J-"};
const std::vector<std::string> kGl2Primed{"I", "J+", "J3'", "J-"};
const std::vector<std::string> kH4{"M", "A+", "N", "A-"};

void classical_gl2_relations(Builder& b, std::string_view j3) {
  b.rel(j3, "J+", b.g("J+").scaled(Rational(2)));
  b.rel(j3, "J-", b.g("J-").scaled(Rational(-2)));
}

Element classical_gl2_casimir(const Builder& b) {
  const Element j3 = b.g("J3");
  return b.mul({j3, j3}) +
         (b.mul({b.g("J+"), b.g("J-")}) + b.mul({b.g("J-"), b.g("J+")})).scaled(Rational(2));
}

void classical_h4_relations(Builder& b) {
  b.rel("N", "A+", b.g("A+"));
  b.rel("N", "A-", -b.g("A-"));
  b.rel("A-", "A+", b.g("M"));
}

Element classical_h4_casimir(const Builder& b) {
  return b.mul({b.g("N"), b.g("M")}).scaled(Rational(2)) - b.mul({b.g("A+"), b.g("A-")}) -
         b.mul({b.g("A-"), b.g("A+")});
}

HopfPresentation gl2_classical(int order) {
  Builder b("gl2.classical", kGl2, 0, ParamSpace::make({}, order));
  classical_gl2_relations(b, "J3");
  b.rel("J+", "J-", b.g("J3"));
  return b.done({b.prim("I"), b.prim("J+"), b.prim("J3"), b.prim("J-")},
                classical_gl2_casimir(b));
}

HopfPresentation gl2_iplus_standard(int order) {
  auto sp = ParamSpace::make({plain_symbol("a"), ratio_symbol("kappa", "a_plus", "a")}, order);
  Builder b("gl2.Iplus.standard", kGl2Primed, 0, sp);
  const Element j3 = b.g("J3'"), jp = b.g("J+"), jm = b.g("J-");
  const Series a = b.p("a"), k = b.p("kappa");
  const Element a_j3 = j3.scaled(a);
  // sinh(a J3'/2)/(a/2) = J3' * sinh_over_arg(a J3'/2)
  const Element sh_half = b.mul({j3, b.f(Analytic::sinh_over_arg, a_j3.scaled(Rational(1, 2)))});
  const Element e_plus = b.f(Analytic::exp, a_j3.scaled(Rational(1, 2)));
  const Element e_minus = b.f(Analytic::exp, a_j3.scaled(Rational(-1, 2)));

  b.rel("J3'", "J+", jp.scaled(Rational(2)));
  b.rel("J3'", "J-", jm.scaled(Rational(-2)) - sh_half.scaled(k) - jp.scaled(k * k));
  const Series half_expm1 = analytic_series(Analytic::expm1_over_arg, a).scaled(Rational(1, 2));
  b.rel("J+", "J-",
        b.mul({j3, b.f(Analytic::sinh_over_arg, a_j3)}) +
            (b.mul({e_minus, jp}) + b.mul({jp, e_plus})).scaled(k * half_expm1));

  // 2/(a tanh a) (cosh(a J3') - 1) = 2 (a coth a) J3'^2 (cosh(a J3') - 1)/(a J3')^2
  Element casimir =
      b.mul({j3, j3, b.f(Analytic::cosh_minus_one_over_sq, a_j3)})
          .scaled(analytic_series(Analytic::arg_coth, a).scaled(Rational(2))) +
      (b.mul({jp, jm}) + b.mul({jm, jp})).scaled(Rational(2)) + b.mul({jp, jp}).scaled(k * k) +
      (b.mul({sh_half, jp}) + b.mul({jp, sh_half})).scaled(k);

  return b.done({b.prim("I"), b.t(e_plus, jp) + b.t(jp, e_minus), b.prim("J3'"),
                 b.t(e_plus, jm) + b.t(jm, e_minus)},
                casimir);
}

HopfPresentation gl2_iplus_nonstandard(int order) {
  auto sp = ParamSpace::make(
      {plain_symbol("a_plus"), ratio_symbol("lambda", "b_plus", "a_plus")}, order);
  Builder b("gl2.Iplus.nonstandard", kGl2, 0, sp);
  const Element i = b.g("I"), jp = b.g("J+"), j3 = b.g("J3"), jm = b.g("J-");
  const Series ap = b.p("a_plus"), l = b.p("lambda");
  const Element arg = jp.scaled(ap);
  const Element e = b.f(Analytic::exp, arg);
  const Element e_neg = b.f(Analytic::exp, -arg);
  const Element shifted = j3 - i.scaled(l);  // J3 - (b_plus/a_plus) I
  // (e^{a_plus J+} - 1)/a_plus = J+ * expm1_over_arg(a_plus J+)
  const Element grow = b.mul({jp, b.f(Analytic::expm1_over_arg, arg)});
  // (1 - e^{-a_plus J+})/a_plus = J+ * expm1_over_arg(-a_plus J+)
  const Element shrink = b.mul({jp, b.f(Analytic::expm1_over_arg, -arg)});

  b.rel("J3", "J+", grow.scaled(Rational(2)));
  b.rel("J3", "J-", jm.scaled(Rational(-2)) + b.mul({shifted, shifted}).scaled(ap.scaled(Rational(1, 2))));
  b.rel("J+", "J-", j3 + b.mul({i, e - b.one()}).scaled(l));

  const TensorElement d3 = b.t(b.one(), j3) + b.t(j3, e) - b.t(i, e - b.one()).scaled(l);
  const TensorElement dm = b.t(b.one(), jm) + b.t(jm, e) -
                           b.t(shifted, b.mul({i, e})).scaled(l * ap.scaled(Rational(1, 2)));

  Element casimir = b.mul({shifted, e_neg, shifted}) + b.mul({j3, i}).scaled(l.scaled(Rational(2))) +
                    (b.mul({shrink, jm}) + b.mul({jm, shrink})).scaled(Rational(2)) +
                    (e_neg - b.one()).scaled(Rational(2));

  return b.done({b.prim("I"), b.prim("J+"), d3, dm}, casimir);
}

HopfPresentation gl2_ii_standard(int order) {
  auto sp = ParamSpace::plain({"a", "b"}, order);
  Builder b("gl2.II.standard", kGl2, 0, sp);
  const Element i = b.g("I"), jp = b.g("J+"), j3 = b.g("J3"), jm = b.g("J-");
  const Series a = b.p("a"), bb = b.p("b");
  classical_gl2_relations(b, "J3");
  b.rel("J+", "J-", b.mul({j3, b.f(Analytic::sinh_over_arg, j3.scaled(a))}));

  const Element up = (j3.scaled(a) - i.scaled(bb)).scaled(Rational(1, 2));  // (aJ3 - bI)/2
  const Element dn = (j3.scaled(a) + i.scaled(bb)).scaled(Rational(1, 2));  // (aJ3 + bI)/2
  const TensorElement dp = b.t(b.f(Analytic::exp, up), jp) + b.t(jp, b.f(Analytic::exp, -up));
  const TensorElement dm = b.t(b.f(Analytic::exp, dn), jm) + b.t(jm, b.f(Analytic::exp, -dn));

  const Element sh = b.mul({j3, b.f(Analytic::sinh_over_arg, j3.scaled(a).scaled(Rational(1, 2)))});
  Element casimir = b.mul({sh, sh}).scaled(analytic_series(Analytic::cosh, a)) +
                    (b.mul({jp, jm}) + b.mul({jm, jp}))
                        .scaled(analytic_series(Analytic::sinh_over_arg, a).scaled(Rational(2)));

  return b.done({b.prim("I"), dp, b.prim("J3"), dm}, casimir);
}

HopfPresentation gl2_ii_nonstandard(int order) {
  auto sp = ParamSpace::plain({"b", "b_plus"}, order);
  Builder b("gl2.II.nonstandard", kGl2, 0, sp);
  const Element i = b.g("I"), jp = b.g("J+"), j3 = b.g("J3"), jm = b.g("J-");
  const Series bb = b.p("b"), bp = b.p("b_plus");
  classical_gl2_relations(b, "J3");
  b.rel("J+", "J-", j3);

  const Element bi = i.scaled(bb);
  const TensorElement dp = b.t(b.one(), jp) + b.t(jp, b.f(Analytic::exp, bi));
  // (e^{bI} - 1)/b = I * expm1_over_arg(bI)
  const TensorElement d3 =
      b.prim("J3") + b.t(jp, b.mul({i, b.f(Analytic::expm1_over_arg, bi)})).scaled(bp);
  // (e^{-bI} - 1)/(2b) = -(I/2) expm1_over_arg(-bI);  (1 - cosh bI)/(2b^2) = -(I^2/2) cmos(bI)
  const TensorElement dm =
      b.t(b.one(), jm) + b.t(jm, b.f(Analytic::exp, -bi)) -
      b.t(j3, b.mul({i, b.f(Analytic::expm1_over_arg, -bi)})).scaled(bp.scaled(Rational(1, 2))) -
      b.t(jp, b.mul({i, i, b.f(Analytic::cosh_minus_one_over_sq, bi)}))
          .scaled((bp * bp).scaled(Rational(1, 2)));

  return b.done({b.prim("I"), dp, d3, dm}, classical_gl2_casimir(b));
}

HopfPresentation h4_classical(int order) {
  Builder b("h4.classical", kH4, 0, ParamSpace::make({}, order));
  classical_h4_relations(b);
  return b.done({b.prim("M"), b.prim("A+"), b.prim("N"), b.prim("A-")},
                classical_h4_casimir(b));
}

// Shared by h4.xi.theta and h4.xi; `with_theta` selects the space.
HopfPresentation h4_xi_family(int order, bool with_theta) {
  auto sp = with_theta ? ParamSpace::plain({"xi", "theta"}, order)
                       : ParamSpace::plain({"xi"}, order);
  Builder b(with_theta ? "h4.xi.theta" : "h4.xi", kH4, 0, sp);
  const Element m = b.g("M"), ap = b.g("A+"), n = b.g("N"), am = b.g("A-");
  const Series xi = b.p("xi");
  const Series th = with_theta ? b.p("theta") : b.q(0);
  const Element sinh_m = b.mul({m, b.f(Analytic::sinh_over_arg, m.scaled(xi))});
  b.rel("N", "A+", ap);
  b.rel("N", "A-", -am);
  b.rel("A-", "A+", sinh_m);

  const Element up = m.scaled((th + xi).scaled(Rational(1, 2)));  // (theta+xi) M/2
  const Element dn = m.scaled((th - xi).scaled(Rational(1, 2)));  // (theta-xi) M/2
  const TensorElement dp = b.t(b.f(Analytic::exp, up), ap) + b.t(ap, b.f(Analytic::exp, -up));
  const TensorElement dm = b.t(b.f(Analytic::exp, -dn), am) + b.t(am, b.f(Analytic::exp, dn));
  Element casimir = b.mul({n, sinh_m}).scaled(Rational(2)) - b.mul({ap, am}) - b.mul({am, ap});
  return b.done({b.prim("M"), dp, b.prim("N"), dm}, casimir);
}

HopfPresentation h4_betaplus_theta(int order) {
  auto sp = ParamSpace::plain({"beta_plus", "theta"}, order);
  Builder b("h4.betaplus.theta", kH4, 0, sp);
  const Element m = b.g("M"), ap = b.g("A+"), am = b.g("A-");
  const Series bp = b.p("beta_plus"), th = b.p("theta");
  classical_h4_relations(b);
  const Element tm = m.scaled(th);
  const TensorElement dp = b.t(b.one(), ap) + b.t(ap, b.f(Analytic::exp, -tm));
  // (e^{theta M} - 1)/theta = M expm1_over_arg(theta M)
  const TensorElement dm = b.t(b.one(), am) + b.t(am, b.f(Analytic::exp, tm)) +
                           b.t(m, b.mul({m, b.f(Analytic::expm1_over_arg, tm)})).scaled(bp);
  // (1 - e^{-theta M})/theta = M expm1_over_arg(-theta M)
  const TensorElement dn =
      b.prim("N") + b.t(ap, b.mul({m, b.f(Analytic::expm1_over_arg, -tm)})).scaled(bp);
  return b.done({b.prim("M"), dp, dn, dm}, classical_h4_casimir(b));
}

HopfPresentation h4_betaplus_xi(int order) {
  auto sp = ParamSpace::make({plain_symbol("xi"), ratio_symbol("mu", "beta_plus", "xi")}, order);
  Builder b("h4.betaplus.xi", kH4, 0, sp);
  const Element m = b.g("M"), ap = b.g("A+"), n = b.g("N"), am = b.g("A-");
  const Series xi = b.p("xi"), mu = b.p("mu");
  const Element xm = m.scaled(xi);
  const Element sinh_m = b.mul({m, b.f(Analytic::sinh_over_arg, xm)});
  // sinh(xi M)/xi - sinh(xi M/2)/(xi/2)
  const Element corr =
      sinh_m - b.mul({m, b.f(Analytic::sinh_over_arg, xm.scaled(Rational(1, 2)))});
  b.rel("N", "A+", ap);
  b.rel("N", "A-", -am + corr.scaled(mu));
  b.rel("A-", "A+", sinh_m);

  const Element e_plus = b.f(Analytic::exp, xm.scaled(Rational(1, 2)));
  const Element e_minus = b.f(Analytic::exp, xm.scaled(Rational(-1, 2)));
  const TensorElement dp = b.t(e_plus, ap) + b.t(ap, e_minus);
  const TensorElement dm = b.t(e_plus, am) + b.t(am, e_minus);
  const TensorElement dn = b.prim("N") + b.t(b.one() - e_plus, ap).scaled(mu) +
                           b.t(ap, b.one() - e_minus).scaled(mu);
  Element casimir = b.mul({n, sinh_m}).scaled(Rational(2)) - b.mul({ap, am}) -
                    b.mul({am, ap}) + b.mul({ap, corr}).scaled(mu.scaled(Rational(2)));
  return b.done({b.prim("M"), dp, dn, dm}, casimir);
}

HopfPresentation h4_alphaplus(int order) {
  auto sp = ParamSpace::plain({"alpha_plus"}, order);
  Builder b("h4.alphaplus", kH4, 0, sp);
  const Element m = b.g("M"), ap = b.g("A+"), n = b.g("N"), am = b.g("A-");
  const Series al = b.p("alpha_plus");
  const Element arg = ap.scaled(al);
  const Element e = b.f(Analytic::exp, arg);
  b.rel("N", "A+", b.mul({ap, b.f(Analytic::expm1_over_arg, arg)}));
  b.rel("N", "A-", -am);
  b.rel("A-", "A+", b.mul({m, e}));

  const TensorElement dm =
      b.t(b.one(), am) + b.t(am, e) + b.t(n, b.mul({m, e})).scaled(al);
  const TensorElement dn = b.t(b.one(), n) + b.t(n, e);
  // (e^{-alpha A+} - 1)/alpha = -A+ expm1_over_arg(-alpha A+)
  const Element shrink = b.mul({ap, b.f(Analytic::expm1_over_arg, -arg)});
  Element casimir =
      b.mul({n, m}).scaled(Rational(2)) - b.mul({shrink, am}) - b.mul({am, shrink});
  return b.done({b.prim("M"), b.prim("A+"), dn, dm}, casimir);
}

struct Entry {
  const char* name;
  const char* classical;
  HopfPresentation (*build)(int);
};

HopfPresentation h4_xi_theta(int order) { return h4_xi_family(order, true); }
HopfPresentation h4_xi(int order) { return h4_xi_family(order, false); }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {"gl2.classical", "gl2.classical", gl2_classical},
      {"gl2.Iplus.standard", "gl2.classical", gl2_iplus_standard},
      {"gl2.Iplus.nonstandard", "gl2.classical", gl2_iplus_nonstandard},
      {"gl2.II.standard", "gl2.classical", gl2_ii_standard},
      {"gl2.II.nonstandard", "gl2.classical", gl2_ii_nonstandard},
      {"h4.classical", "h4.classical", h4_classical},
      {"h4.xi.theta", "h4.classical", h4_xi_theta},
      {"h4.betaplus.theta", "h4.classical", h4_betaplus_theta},
      {"h4.betaplus.xi", "h4.classical", h4_betaplus_xi},
      {"h4.xi", "h4.classical", h4_xi},
      {"h4.alphaplus", "h4.classical", h4_alphaplus},
  };
  return e;
}

const Entry& find_entry(std::string_view name) {
  for (const auto& e : entries()) {
    if (name == e.name) return e;
  }
  std::string valid;
  for (const auto& e : entries()) valid += std::string(valid.empty() ? "" : ", ") + e.name;
  throw LookupError("unknown presentation '" + std::string(name) + "'; valid names: " + valid);
}

}  // namespace

std::vector<std::string> presentation_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.emplace_back(e.name);
  return out;
}

HopfPresentation presentation(std::string_view name, int order) {
  if (order < 1) throw StructuralError("truncation order must be at least 1");
  return find_entry(name).build(order);
}

std::string classical_counterpart(std::string_view name) { return find_entry(name).classical; }

SpacePtr lie_space(int order) { return ParamSpace::plain({"a_plus", "a", "b_plus", "b"}, order); }

WedgeTensor classical_r(std::string_view name, int order) {
  find_entry(name);
  const SpacePtr sp = lie_space(order);
  WedgeTensor r(sp);
  enum { I = 0, Jp = 1, J3 = 2, Jm = 3 };
  auto p = [&](const char* n, long num, long den = 1) {
    return Series::symbol(sp, n, 1, Rational(num, den));
  };
  if (name == "gl2.Iplus.standard") {
    r.add(J3, Jp, p("a_plus", 1, 2));
    r.add(Jp, Jm, p("a", -1));
  } else if (name == "gl2.Iplus.nonstandard") {
    r.add(J3, Jp, p("a_plus", 1, 2));
    r.add(Jp, I, p("b_plus", 1, 2));
  } else if (name == "gl2.II.standard") {
    r.add(J3, I, p("b", -1, 2));
    r.add(Jp, Jm, p("a", -1));
  } else if (name == "gl2.II.nonstandard") {
    r.add(J3, I, p("b", -1, 2));
    r.add(Jp, I, p("b_plus", 1, 2));
  } else if (name != "gl2.classical") {
    throw LookupError("no classical r-matrix for '" + std::string(name) + "'");
  }
  return r;
}

namespace {

ParamImage image(std::string old, long num, long den, int exponent, std::string target) {
  return ParamImage{std::move(old), Rational(num, den), exponent, std::move(target)};
}

CasimirLimit casimir_limit(long beta_den, Counterterm kind) {
  CasimirLimit c;
  c.alpha = Rational(-1, 2);
  c.beta = Rational(1, beta_den);
  c.counterterm = kind;
  return c;
}

ContractionCase classical_case() {
  ContractionCase c;
  c.name = "classical";
  c.title = "gl(2) -> h4, undeformed";
  c.source = "gl2.classical";
  c.target = "h4.classical";
  c.casimir = casimir_limit(2, Counterterm::central_square);
  return c;
}

}  // namespace

std::vector<ContractionCase> list_cases() {
  std::vector<ContractionCase> out;
  {
    ContractionCase c;
    c.name = "II.standard";
    c.title = "standard type II -> h4(xi, theta)";
    c.source = "gl2.II.standard";
    c.target = "h4.xi.theta";
    c.params = {image("a", -1, 1, 2, "xi"), image("b", -1, 1, 2, "theta")};
    c.casimir = casimir_limit(2, Counterterm::sinh_half_square);
    out.push_back(c);
  }
  {
    ContractionCase c;
    c.name = "II.nonstandard";
    c.title = "non-standard type II -> h4(beta_plus, theta)";
    c.source = "gl2.II.nonstandard";
    c.target = "h4.betaplus.theta";
    c.params = {image("b_plus", 2, 1, 3, "beta_plus"), image("b", -1, 1, 2, "theta")};
    c.casimir = casimir_limit(2, Counterterm::central_square);
    out.push_back(c);
  }
  {
    ContractionCase c;
    c.name = "Iplus.standard";
    c.title = "standard type I+ -> h4(beta_plus, xi)";
    c.source = "gl2.Iplus.standard";
    c.target = "h4.betaplus.xi";
    c.params = {image("a_plus", 2, 1, 3, "beta_plus"), image("a", -1, 1, 2, "xi")};
    c.casimir = casimir_limit(2, Counterterm::sinh_half_square);
    c.after_basis_change = "h4.xi";
    out.push_back(c);
  }
  {
    ContractionCase c;
    c.name = "Iplus.nonstandard";
    c.title = "non-standard type I+ -> h4(alpha_plus)";
    c.source = "gl2.Iplus.nonstandard";
    c.target = "h4.alphaplus";
    c.params = {image("a_plus", 1, 1, 1, "alpha_plus"), image("b_plus", -1, 1, 1, "alpha_plus")};
    c.correlated = true;
    c.casimir = casimir_limit(1, Counterterm::central_square);
    out.push_back(c);
  }
  return out;
}

ContractionCase find_case(std::string_view name) {
  if (name == "classical") return classical_case();
  std::string valid = "classical";
  for (auto& c : list_cases()) {
    if (c.name == name) return c;
    valid += ", " + c.name;
  }
  throw LookupError("unknown contraction case '" + std::string(name) + "'; valid names: " + valid);
}

BasisChange primed_basis(const HopfPresentation& h) {
  const Algebra& A = *h.algebra;
  const Element m = A.gen("M"), ap = A.gen("A+"), n = A.gen("N"), am = A.gen("A-");
  const Series mu = A.param("mu");
  const Element half = A.mul(m, A.function(Analytic::sinh_over_arg,
                                            m.scaled(A.param("xi").scaled(Rational(1, 2)))));
  BasisChange b;
  b.forward = {m, ap, n + ap.scaled(mu), am + half.scaled(mu)};
  b.inverse = {m, ap, n - ap.scaled(mu), am - half.scaled(mu)};
  return b;
}

}  // namespace hopfc::catalog
