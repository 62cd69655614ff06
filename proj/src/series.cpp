#include "hopfc/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hopfc/errors.hpp"

namespace hopfc {

// ---------------------------------------------------------------------------
// ParamSpace

ParamSpace::ParamSpace(std::vector<Symbol> symbols, int order)
    : symbols_(std::move(symbols)), order_(order) {}

SpacePtr ParamSpace::make(std::vector<Symbol> symbols, int order) {
  if (symbols.size() > kMaxSymbols) {
    throw StructuralError("parameter space supports at most " + std::to_string(kMaxSymbols) +
                          " symbols");
  }
  if (order < 0) throw StructuralError("truncation order must be nonnegative");
  std::set<std::string> seen;
  for (const auto& s : symbols) {
    if (s.name.empty()) throw StructuralError("empty symbol name");
    if (!seen.insert(s.name).second) throw StructuralError("duplicate symbol '" + s.name + "'");
    if (s.weight < 0) throw StructuralError("negative weight for '" + s.name + "'");
    if (s.floor < 0 && s.weight != 0) {
      throw StructuralError("invertible symbol '" + s.name + "' must have weight 0");
    }
    if (s.is_ratio() && s.weight != 0) {
      throw StructuralError("ratio symbol '" + s.name + "' must have weight 0");
    }
    if (s.floor < -kUncapped || s.cap > kUncapped || s.floor > s.cap) {
      throw StructuralError("bad exponent window for '" + s.name + "'");
    }
  }
  return SpacePtr(new ParamSpace(std::move(symbols), order));
}

SpacePtr ParamSpace::plain(const std::vector<std::string>& names, int order) {
  std::vector<Symbol> syms;
  for (const auto& n : names) {
    Symbol s;
    s.name = n;
    syms.push_back(std::move(s));
  }
  return make(std::move(syms), order);
}

std::optional<std::size_t> ParamSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t ParamSpace::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw StructuralError("symbol '" + std::string(name) + "' not in parameter space");
  return *i;
}

std::vector<std::string> ParamSpace::names() const {
  std::vector<std::string> out;
  for (const auto& s : symbols_) out.push_back(s.name);
  return out;
}

SpacePtr ParamSpace::with_order(int order) const { return make(symbols_, order); }

SpacePtr ParamSpace::without(std::string_view name) const {
  std::vector<Symbol> syms;
  for (const auto& s : symbols_) {
    if (s.name != name) syms.push_back(s);
  }
  return make(std::move(syms), order_);
}

SpacePtr ParamSpace::merge(const ParamSpace& a, const ParamSpace& b) {
  if (a.order_ != b.order_) throw StructuralError("cannot merge spaces of different order");
  std::vector<Symbol> syms = a.symbols_;
  for (const auto& s : b.symbols_) {
    auto i = a.index_of(s.name);
    if (!i) {
      syms.push_back(s);
    } else if (!(a.symbols_[*i] == s)) {
      throw StructuralError("symbol '" + s.name + "' declared differently in merged spaces");
    }
  }
  return make(std::move(syms), a.order_);
}

int ParamSpace::weighted_degree(const Exponents& e) const {
  int w = 0;
  for (std::size_t i = 0; i < symbols_.size(); ++i) w += symbols_[i].weight * e[i];
  return w;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a.get() == b.get() || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Series

namespace {

void require_same(const Series& a, const Series& b, const char* op) {
  if (!same_space(a.space(), b.space())) {
    throw StructuralError(std::string("series ") + op + " across different parameter spaces");
  }
}

std::string term_str(const ParamSpace& sp, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += sp.symbols()[i].name;
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Checks window and weight; returns false if the term is truncated away.
bool admissible(const ParamSpace& sp, const Exponents& e) {
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const auto& s = sp.symbols()[i];
    if (e[i] < s.floor) {
      throw FloorError("exponent " + std::to_string(e[i]) + " of '" + s.name +
                       "' below floor " + std::to_string(s.floor));
    }
    if (e[i] > s.cap) return false;
  }
  return sp.weighted_degree(e) <= sp.order();
}

}  // namespace

Series::Series(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw StructuralError("series without parameter space");
}

Series Series::constant(SpacePtr space, const Rational& c) {
  return monomial(std::move(space), Exponents{}, c);
}

Series Series::symbol(SpacePtr space, std::string_view name, int power, const Rational& coeff) {
  Exponents e{};
  e[space->require(name)] = static_cast<std::int8_t>(power);
  return monomial(std::move(space), e, coeff);
}

Series Series::monomial(SpacePtr space, const Exponents& e, const Rational& coeff) {
  Series s(std::move(space));
  if (!coeff.is_zero() && admissible(*s.space_, e)) s.terms_.emplace_back(e, coeff);
  return s;
}

Series Series::from_terms(SpacePtr space, std::vector<Term> terms) {
  Series s(std::move(space));
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  for (auto& t : terms) {
    if (!s.terms_.empty() && s.terms_.back().first == t.first) {
      s.terms_.back().second += t.second;
      if (s.terms_.back().second.is_zero()) s.terms_.pop_back();
      continue;
    }
    if (t.second.is_zero() || !admissible(*s.space_, t.first)) continue;
    s.terms_.push_back(std::move(t));
  }
  return s;
}

Rational Series::constant_term() const {
  if (!terms_.empty() && terms_.front().first == Exponents{}) return terms_.front().second;
  // The zero exponent vector sorts first only when no negative exponents exist.
  for (const auto& [e, c] : terms_) {
    if (e == Exponents{}) return c;
  }
  return 0;
}

bool Series::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == Exponents{});
}

int Series::min_weight() const {
  int w = INT_MAX;
  for (const auto& t : terms_) w = std::min(w, space_->weighted_degree(t.first));
  return w;
}

int Series::min_exponent(std::size_t symbol) const {
  if (terms_.empty()) return 0;
  int m = INT_MAX;
  for (const auto& t : terms_) m = std::min<int>(m, t.first[symbol]);
  return m;
}

int Series::max_exponent(std::size_t symbol) const {
  if (terms_.empty()) return 0;
  int m = INT_MIN;
  for (const auto& t : terms_) m = std::max<int>(m, t.first[symbol]);
  return m;
}

Series& Series::operator+=(const Series& o) {
  require_same(*this, o, "addition");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series& Series::operator*=(const Series& o) {
  *this = *this * o;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require_same(a, b, "multiplication");
  if (a.is_zero() || b.is_zero()) return Series(a.space_);
  std::vector<Series::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  const auto& sp = *a.space_;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (std::size_t k = 0; k < sp.size(); ++k) {
        e[k] = static_cast<std::int8_t>(ea[k] + eb[k]);
      }
      if (!admissible(sp, e)) continue;
      out.emplace_back(e, ca * cb);
    }
  }
  return Series::from_terms(a.space_, std::move(out));
}

Series Series::operator-() const {
  Series s(space_);
  s.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.terms_.emplace_back(e, -c);
  return s;
}

Series Series::scaled(const Rational& c) const {
  if (c.is_zero()) return Series(space_);
  Series s(space_);
  s.terms_.reserve(terms_.size());
  for (const auto& [e, x] : terms_) s.terms_.emplace_back(e, x * c);
  return s;
}

Series Series::pow(int k) const {
  if (k < 0) throw StructuralError("negative power of a series");
  Series r = constant(space_, 1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

bool operator==(const Series& a, const Series& b) {
  return same_space(a.space_, b.space_) && a.terms_ == b.terms_;
}

std::string Series::str() const {
  if (terms_.empty()) return "0";
  auto sorted = terms_;
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Term& x, const Term& y) {
    const int wx = space_->weighted_degree(x.first);
    const int wy = space_->weighted_degree(y.first);
    if (wx != wy) return wx < wy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const std::string mono = term_str(*space_, e);
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag.str() << "*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Substitution and slicing

Series substitute(const Series& x, const SymbolMap& sigma, const SpacePtr& target) {
  const auto& src = *x.space();
  const std::size_t n = src.size();
  // Image of each source symbol in the target space.
  std::vector<Series> image;
  image.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& name = src.symbols()[i].name;
    if (auto it = sigma.find(name); it != sigma.end()) {
      if (!same_space(it->second.space(), target)) {
        throw StructuralError("substitution image for '" + name + "' not in target space");
      }
      image.push_back(it->second);
    } else if (target->has(name)) {
      image.push_back(Series::symbol(target, name));
    } else {
      image.push_back(Series(target));  // marker: symbol must not occur
    }
  }
  // Power caches, positive and negative.
  std::vector<std::map<int, Series>> powers(n);
  auto power_of = [&](std::size_t i, int k) -> const Series& {
    auto& cache = powers[i];
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    const auto& name = src.symbols()[i].name;
    if (!sigma.count(name) && !target->has(name)) {
      throw StructuralError("symbol '" + name + "' has no image in target space");
    }
    Series base = image[i];
    int count = k;
    if (k < 0) {
      if (base.size() != 1) {
        throw FloorError("negative power of '" + name + "' needs a monomial image");
      }
      const auto& [e, c] = base.terms().front();
      Exponents inv{};
      for (std::size_t s = 0; s < target->size(); ++s) inv[s] = static_cast<std::int8_t>(-e[s]);
      base = Series::monomial(target, inv, Rational(1) / c);
      count = -k;
    }
    Series r = Series::constant(target, 1);
    for (int j = 0; j < count; ++j) r *= base;
    return cache.emplace(k, std::move(r)).first->second;
  };
  Series out(target);
  for (const auto& [e, c] : x.terms()) {
    Series t = Series::constant(target, c);
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i) {
      if (e[i] != 0) t *= power_of(i, e[i]);
    }
    out += t;
  }
  return out;
}

Series rebase(const Series& x, const SpacePtr& target) {
  if (same_space(x.space(), target)) return Series::from_terms(target, x.terms());
  const auto& src = *x.space();
  std::vector<int> slot(src.size(), -1);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (auto j = target->index_of(src.symbols()[i].name)) slot[i] = static_cast<int>(*j);
  }
  std::vector<Series::Term> terms;
  for (const auto& [e, c] : x.terms()) {
    Exponents f{};
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (e[i] == 0) continue;
      if (slot[i] < 0) {
        throw StructuralError("symbol '" + src.symbols()[i].name +
                              "' occurs but is absent from the target space");
      }
      f[slot[i]] = e[i];
    }
    terms.emplace_back(f, c);
  }
  return Series::from_terms(target, std::move(terms));
}

Series eps_limit(const Series& x, const SpacePtr& target) {
  const auto& src = *x.space();
  auto ei = src.index_of(kEps);
  SpacePtr tgt = target ? target : src.without(kEps);
  if (!ei) return rebase(x, tgt);
  std::vector<std::string> offending;
  std::vector<Series::Term> kept;
  for (const auto& [e, c] : x.terms()) {
    if (e[*ei] < 0) {
      offending.push_back(Series::monomial(x.space(), e, c).str());
    } else if (e[*ei] == 0) {
      kept.emplace_back(e, c);
    }
  }
  if (!offending.empty()) {
    throw DivergenceError("eps-limit diverges: " + offending.front() +
                              (offending.size() > 1 ? " (+" + std::to_string(offending.size() - 1) +
                                                          " more)"
                                                    : ""),
                          offending);
  }
  return rebase(Series::from_terms(x.space(), std::move(kept)), tgt);
}

bool eps_finite(const Series& x) {
  auto ei = x.space()->index_of(kEps);
  return !ei || x.min_exponent(*ei) >= 0;
}

Series slice_zero(const Series& x, std::string_view name) {
  auto i = x.space()->index_of(name);
  if (!i) return x;
  std::vector<Series::Term> kept;
  std::vector<std::string> offending;
  for (const auto& [e, c] : x.terms()) {
    if (e[*i] < 0) offending.push_back(Series::monomial(x.space(), e, c).str());
    if (e[*i] == 0) kept.emplace_back(e, c);
  }
  if (!offending.empty()) {
    throw DivergenceError("limit " + std::string(name) + " -> 0 diverges: " + offending.front(),
                          offending);
  }
  return Series::from_terms(x.space(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Analytic functions

std::string_view analytic_name(Analytic kind) {
  switch (kind) {
    case Analytic::exp: return "exp";
    case Analytic::sinh_over_arg: return "sinh_over_arg";
    case Analytic::expm1_over_arg: return "expm1_over_arg";
    case Analytic::cosh: return "cosh";
    case Analytic::cosh_minus_one: return "cosh_minus_one";
    case Analytic::cosh_minus_one_over_sq: return "cosh_minus_one_over_sq";
    case Analytic::arg_coth: return "arg_coth";
  }
  return "?";
}

std::optional<Analytic> analytic_from_name(std::string_view name) {
  for (auto k : {Analytic::exp, Analytic::sinh_over_arg, Analytic::expm1_over_arg, Analytic::cosh,
                 Analytic::cosh_minus_one, Analytic::cosh_minus_one_over_sq, Analytic::arg_coth}) {
    if (analytic_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

Rational binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

std::vector<Rational> bernoulli(int count) {
  std::vector<Rational> b(count, 0);
  if (count == 0) return b;
  b[0] = 1;
  for (int m = 1; m < count; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * b[k];
    b[m] = -s / Rational(m + 1);
  }
  return b;
}

}  // namespace

std::vector<Rational> taylor_coefficients(Analytic kind, int count) {
  std::vector<Rational> c(std::max(count, 0), 0);
  for (int k = 0; k < count; ++k) {
    const bool even = k % 2 == 0;
    switch (kind) {
      case Analytic::exp: c[k] = Rational(1) / factorial(k); break;
      case Analytic::sinh_over_arg:
        if (even) c[k] = Rational(1) / factorial(k + 1);
        break;
      case Analytic::expm1_over_arg: c[k] = Rational(1) / factorial(k + 1); break;
      case Analytic::cosh:
        if (even) c[k] = Rational(1) / factorial(k);
        break;
      case Analytic::cosh_minus_one:
        if (even && k > 0) c[k] = Rational(1) / factorial(k);
        break;
      case Analytic::cosh_minus_one_over_sq:
        if (even) c[k] = Rational(1) / factorial(k + 2);
        break;
      case Analytic::arg_coth: break;
    }
  }
  if (kind == Analytic::arg_coth) {
    // x coth x = sum_k 2^{2k} B_{2k} x^{2k} / (2k)!
    auto b = bernoulli(count + 1);
    for (int k = 0; k < count; k += 2) c[k] = pow(Rational(2), k) * b[k] / factorial(k);
  }
  return c;
}

Series analytic_series(Analytic kind, const Series& arg) {
  const auto& sp = arg.space();
  if (!arg.is_zero() && arg.min_weight() <= 0) {
    throw NonTruncatableError("argument '" + arg.str() + "' has a weight-zero term");
  }
  const int order = sp->order();
  auto coeff = taylor_coefficients(kind, order + 1);
  Series out = Series::constant(sp, coeff[0]);
  Series p = Series::constant(sp, 1);
  for (int k = 1; k <= order; ++k) {
    p *= arg;
    if (p.is_zero()) break;
    if (!coeff[k].is_zero()) out += p.scaled(coeff[k]);
  }
  return out;
}

}  // namespace hopfc
