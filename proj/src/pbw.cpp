#include "hopfc/pbw.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>

#include "hopfc/errors.hpp"

namespace hopfc {

namespace {
std::atomic<long> g_step_budget{kDefaultStepBudget};
}

long default_step_budget() { return g_step_budget.load(); }
void set_default_step_budget(long steps) { g_step_budget.store(steps); }

// ---------------------------------------------------------------------------
// GeneratorSet / Monomial

GeneratorSet::GeneratorSet(std::vector<std::string> names, std::vector<bool> central)
    : names_(std::move(names)), central_(std::move(central)) {
  if (names_.size() > kMaxGenerators) throw StructuralError("too many generators");
  if (central_.empty()) central_.assign(names_.size(), false);
  if (central_.size() != names_.size()) throw StructuralError("central flags size mismatch");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw StructuralError("duplicate generator names");
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t GeneratorSet::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw StructuralError("unknown generator '" + std::string(name) + "'");
  return *i;
}

Monomial Monomial::gen(std::size_t i, int power) {
  Monomial m;
  m.e.at(i) = static_cast<std::uint8_t>(power);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

std::size_t Monomial::first() const {
  for (std::size_t i = 0; i < kMaxGenerators; ++i) {
    if (e[i]) return i;
  }
  return kMaxGenerators;
}

std::size_t Monomial::last() const {
  for (std::size_t i = kMaxGenerators; i-- > 0;) {
    if (e[i]) return i;
  }
  return kMaxGenerators;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.e > b.e;
}

std::string monomial_str(const GeneratorSet& gens, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!m.e[i]) continue;
    if (!out.empty()) out += " ";
    out += gens.name(i);
    if (m.e[i] != 1) out += "^" + std::to_string(m.e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string coefficient_str(const Series& c, bool leading, bool has_mono) {
  std::string s = c.str();
  const bool single = c.size() == 1;
  std::string sign;
  if (single && c.terms().front().second.sign() < 0) {
    sign = "-";
    s = (-c).str();
  }
  std::string out = leading ? sign : (sign.empty() ? " + " : " - ");
  if (!single) {
    out += "(" + s + ")";
  } else if (s != "1" || !has_mono) {
    out += s;
  } else {
    return out;
  }
  return has_mono ? out + "*" : out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Element

Element Element::constant(const SpacePtr& space, const Series& c) {
  return monomial(space, Monomial::unit(), c);
}

Element Element::constant(const SpacePtr& space, const Rational& c) {
  return constant(space, Series::constant(space, c));
}

Element Element::monomial(const SpacePtr& space, const Monomial& m, const Series& c) {
  Element x(space);
  x.add(m, c);
  return x;
}

Element Element::generator(const SpacePtr& space, std::size_t i) {
  return monomial(space, Monomial::gen(i), Series::constant(space, 1));
}

Series Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Series(space_) : it->second;
}

int Element::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Element::add(const Monomial& m, const Series& c) {
  if (c.is_zero()) return;
  if (!same_space(c.space(), space_)) throw StructuralError("element coefficient space mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (!same_space(o.space_, space_)) throw StructuralError("element space mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element Element::operator-() const {
  Element x(space_);
  for (const auto& [m, c] : terms_) x.terms_.emplace(m, -c);
  return x;
}

Element Element::scaled(const Series& c) const {
  Element x(space_);
  for (const auto& [m, s] : terms_) x.add(m, s * c);
  return x;
}

Element Element::scaled(const Rational& c) const {
  Element x(space_);
  if (c.is_zero()) return x;
  for (const auto& [m, s] : terms_) x.terms_.emplace(m, s.scaled(c));
  return x;
}

Element Element::map_coefficients(const SpacePtr& target,
                                  const std::function<Series(const Series&)>& f) const {
  Element x(target);
  for (const auto& [m, c] : terms_) x.add(m, f(c));
  return x;
}

bool operator==(const Element& a, const Element& b) {
  return same_space(a.space_, b.space_) && a.terms_ == b.terms_;
}

std::string Element::str(const GeneratorSet& gens) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [m, c] : terms_) {
    const bool has_mono = !m.is_unit();
    out += coefficient_str(c, leading, has_mono);
    if (has_mono) out += monomial_str(gens, m);
    leading = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// TensorElement

TensorElement::TensorElement(SpacePtr space, int rank) : space_(std::move(space)), rank_(rank) {
  if (rank != 2 && rank != 3) throw StructuralError("tensor rank must be 2 or 3");
}

TensorElement TensorElement::pure(const Element& a, const Element& b) {
  TensorElement t(a.space(), 2);
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) t.add({u, v, Monomial{}}, cu * cv);
  }
  return t;
}

TensorElement TensorElement::pure(const Element& a, const Element& b, const Element& c) {
  TensorElement t(a.space(), 3);
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      const Series uv = cu * cv;
      for (const auto& [w, cw] : c.terms()) t.add({u, v, w}, uv * cw);
    }
  }
  return t;
}

void TensorElement::add(const TensorKey& k, const Series& c) {
  if (c.is_zero()) return;
  if (!same_space(c.space(), space_)) throw StructuralError("tensor coefficient space mismatch");
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.rank_ != rank_) throw StructuralError("tensor rank mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) { return *this += -o; }

TensorElement TensorElement::operator-() const {
  TensorElement t(space_, rank_);
  for (const auto& [k, c] : terms_) t.terms_.emplace(k, -c);
  return t;
}

TensorElement TensorElement::scaled(const Series& c) const {
  TensorElement t(space_, rank_);
  for (const auto& [k, s] : terms_) t.add(k, s * c);
  return t;
}

TensorElement TensorElement::map_coefficients(
    const SpacePtr& target, const std::function<Series(const Series&)>& f) const {
  TensorElement t(target, rank_);
  for (const auto& [k, c] : terms_) t.add(k, f(c));
  return t;
}

TensorElement TensorElement::flipped() const {
  if (rank_ != 2) throw StructuralError("flip needs a rank-2 tensor");
  TensorElement t(space_, 2);
  for (const auto& [k, c] : terms_) t.add({k[1], k[0], Monomial{}}, c);
  return t;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return a.rank_ == b.rank_ && same_space(a.space_, b.space_) && a.terms_ == b.terms_;
}

std::string TensorElement::str(const GeneratorSet& gens) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [k, c] : terms_) {
    out += coefficient_str(c, leading, true);
    out += monomial_str(gens, k[0]) + " (x) " + monomial_str(gens, k[1]);
    if (rank_ == 3) out += " (x) " + monomial_str(gens, k[2]);
    leading = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algebra

struct Algebra::Cache {
  std::map<std::pair<std::size_t, Monomial>, Element> left;
  std::map<std::pair<Monomial, Monomial>, Element> products;
  std::set<std::size_t> resolving;
  long steps = 0;
  int depth = 0;
};

namespace {

// RAII depth tracker resetting the step counter at top level.
class TopLevel {
 public:
  TopLevel(long& steps, int& depth) : depth_(depth) {
    if (depth_++ == 0) steps = 0;
  }
  ~TopLevel() { --depth_; }

 private:
  int& depth_;
};

}  // namespace

Algebra::Algebra(GeneratorSet gens, SpacePtr space)
    : gens_(std::move(gens)),
      space_(std::move(space)),
      table_(gens_.size() * gens_.size()),
      step_budget_(default_step_budget()),
      cache_(std::make_unique<Cache>()) {}

Algebra::Algebra(const Algebra& o)
    : gens_(o.gens_),
      space_(o.space_),
      step_budget_(o.step_budget_),
      cache_(std::make_unique<Cache>()) {
  std::lock_guard lock(o.mutex_);
  table_ = o.table_;
  resolver_ = o.resolver_;
}

Algebra::~Algebra() = default;

void Algebra::check_element(const Element& x) const {
  if (!same_space(x.space(), space_)) {
    throw StructuralError("element coefficients are not in the algebra's parameter space");
  }
  for (const auto& [m, c] : x.terms()) {
    for (std::size_t i = gens_.size(); i < kMaxGenerators; ++i) {
      if (m.e[i]) throw StructuralError("monomial uses a generator outside the algebra");
    }
  }
}

void Algebra::set_commutator(std::size_t x, std::size_t y, const Element& rhs) {
  std::lock_guard lock(mutex_);
  if (x == y || x >= size() || y >= size()) throw StructuralError("bad commutator pair");
  check_element(rhs);
  if (x > y) {
    table_[slot(x, y)] = rhs;
  } else {
    table_[slot(y, x)] = -rhs;
  }
  cache_ = std::make_unique<Cache>();
}

void Algebra::set_commutator(std::string_view x, std::string_view y, const Element& rhs) {
  set_commutator(gens_.require(x), gens_.require(y), rhs);
}

void Algebra::set_resolver(Resolver r) {
  std::lock_guard lock(mutex_);
  resolver_ = std::move(r);
  cache_ = std::make_unique<Cache>();
}

bool Algebra::has_rewrite(std::size_t i, std::size_t j) const {
  std::lock_guard lock(mutex_);
  return table_.at(slot(i, j)).has_value();
}

Element Algebra::rewrite(std::size_t i, std::size_t j) const {
  std::lock_guard lock(mutex_);
  if (i <= j || i >= size()) throw StructuralError("rewrite needs i > j");
  auto& entry = table_[slot(i, j)];
  if (entry) return *entry;
  if (resolver_) {
    const std::size_t s = slot(i, j);
    if (!cache_->resolving.insert(s).second) {
      throw ConfluenceError("cyclic dependency while inducing [" + gens_.name(i) + ", " +
                            gens_.name(j) + "]");
    }
    Element r(space_);
    try {
      r = resolver_(i, j);
    } catch (...) {
      cache_->resolving.erase(s);
      throw;
    }
    cache_->resolving.erase(s);
    check_element(r);
    entry = std::move(r);
    return *entry;
  }
  if (gens_.central(i) || gens_.central(j)) return Element(space_);
  throw StructuralError("rewrite table has no entry for (" + gens_.name(i) + ", " +
                        gens_.name(j) + ")");
}

long Algebra::steps_used() const {
  std::lock_guard lock(mutex_);
  return cache_->steps;
}

Element Algebra::left_mul_gen(std::size_t g, const Monomial& m) const {
  auto key = std::make_pair(g, m);
  if (auto it = cache_->left.find(key); it != cache_->left.end()) return it->second;
  if (++cache_->steps > step_budget_) {
    throw ConfluenceError("rewrite step budget of " + std::to_string(step_budget_) +
                          " exceeded");
  }
  const std::size_t f = m.first();
  Element result(space_);
  if (f >= g || gens_.central(g)) {
    Monomial r = m;
    ++r.e[g];
    result.add(r, Series::constant(space_, 1));
  } else {
    // X_g X_f m' = X_f (X_g m') + R_gf m'
    Monomial rest = m;
    --rest.e[f];
    const Element inner = left_mul_gen(g, rest);
    for (const auto& [u, c] : inner.terms()) result += left_mul_gen(f, u).scaled(c);
    result += mul_element_monomial(rewrite(g, f), rest);
  }
  return cache_->left.emplace(key, std::move(result)).first->second;
}

Element Algebra::mul_element_monomial(const Element& x, const Monomial& m) const {
  Element out(space_);
  for (const auto& [u, c] : x.terms()) out += mul_monomials(u, m).scaled(c);
  return out;
}

Element Algebra::mul_monomials(const Monomial& u, const Monomial& v) const {
  std::lock_guard lock(mutex_);
  TopLevel top(cache_->steps, cache_->depth);
  if (u.is_unit()) return Element::monomial(space_, v, Series::constant(space_, 1));
  if (v.is_unit()) return Element::monomial(space_, u, Series::constant(space_, 1));
  // Fast path: the concatenation is already ordered.
  if (u.last() <= v.first()) {
    Monomial r = u;
    for (std::size_t i = 0; i < kMaxGenerators; ++i) r.e[i] += v.e[i];
    return Element::monomial(space_, r, Series::constant(space_, 1));
  }
  auto key = std::make_pair(u, v);
  if (auto it = cache_->products.find(key); it != cache_->products.end()) return it->second;
  const std::size_t h = u.last();
  Monomial head = u;
  --head.e[h];
  const Element w = left_mul_gen(h, v);
  Element out(space_);
  for (const auto& [x, c] : w.terms()) out += mul_monomials(head, x).scaled(c);
  return cache_->products.emplace(key, std::move(out)).first->second;
}

Element Algebra::mul(const Element& x, const Element& y) const {
  std::lock_guard lock(mutex_);
  TopLevel top(cache_->steps, cache_->depth);
  check_element(x);
  check_element(y);
  Element out(space_);
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) {
      const Series c = cu * cv;
      if (c.is_zero()) continue;
      out += mul_monomials(u, v).scaled(c);
    }
  }
  return out;
}

Element Algebra::mul(std::initializer_list<Element> factors) const {
  Element out = one();
  for (const auto& f : factors) out = mul(out, f);
  return out;
}

Element Algebra::commutator(const Element& x, const Element& y) const {
  return mul(x, y) - mul(y, x);
}

Element Algebra::pow(const Element& x, int k) const {
  if (k < 0) throw StructuralError("negative power of an algebra element");
  Element r = one();
  for (int i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

Element Algebra::normal_form(const Word& w) const {
  std::lock_guard lock(mutex_);
  TopLevel top(cache_->steps, cache_->depth);
  Element acc = one();
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k] >= size()) throw StructuralError("word letter out of range");
    Element next(space_);
    for (const auto& [m, c] : acc.terms()) next += left_mul_gen(w[k], m).scaled(c);
    acc = std::move(next);
  }
  return acc;
}

Element Algebra::normal_form(const Word& w, std::size_t pos) const {
  if (pos + 1 >= w.size() || w[pos] <= w[pos + 1]) {
    throw StructuralError("forced rewrite position is not a descent");
  }
  Word swapped = w;
  std::swap(swapped[pos], swapped[pos + 1]);
  const Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  const Word tail(w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
  return normal_form(swapped) +
         mul(mul(normal_form(head), rewrite(w[pos], w[pos + 1])), normal_form(tail));
}

Element Algebra::function(Analytic kind, const Element& arg) const {
  check_element(arg);
  for (const auto& [m, c] : arg.terms()) {
    if (c.min_weight() <= 0) {
      throw NonTruncatableError("generator-function argument has a weight-zero term: " +
                                arg.str(gens_));
    }
  }
  if (arg.terms().size() > 1) {
    for (auto i = arg.terms().begin(); i != arg.terms().end(); ++i) {
      for (auto j = std::next(i); j != arg.terms().end(); ++j) {
        const Element xi = Element::monomial(space_, i->first, Series::constant(space_, 1));
        const Element xj = Element::monomial(space_, j->first, Series::constant(space_, 1));
        if (!commutator(xi, xj).is_zero()) {
          throw UnsupportedArgumentError("generator-function argument has non-commuting terms: " +
                                         arg.str(gens_));
        }
      }
    }
  }
  const int order = space_->order();
  const auto coeff = taylor_coefficients(kind, order + 1);
  Element out = constant(Series::constant(space_, coeff[0]));
  Element p = one();
  for (int k = 1; k <= order; ++k) {
    p = mul(p, arg);
    if (p.is_zero()) break;
    if (!coeff[k].is_zero()) out += p.scaled(coeff[k]);
  }
  return out;
}

TensorElement Algebra::tensor_mul(const TensorElement& x, const TensorElement& y) const {
  if (x.rank() != y.rank()) throw StructuralError("tensor rank mismatch in product");
  std::lock_guard lock(mutex_);
  TopLevel top(cache_->steps, cache_->depth);
  TensorElement out(space_, x.rank());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const Series c = cx * cy;
      if (c.is_zero()) continue;
      const Element p0 = mul_monomials(kx[0], ky[0]);
      const Element p1 = mul_monomials(kx[1], ky[1]);
      if (x.rank() == 2) {
        for (const auto& [u, a] : p0.terms()) {
          const Series ca = c * a;
          for (const auto& [v, b] : p1.terms()) out.add({u, v, Monomial{}}, ca * b);
        }
      } else {
        const Element p2 = mul_monomials(kx[2], ky[2]);
        for (const auto& [u, a] : p0.terms()) {
          const Series ca = c * a;
          for (const auto& [v, b] : p1.terms()) {
            const Series cab = ca * b;
            for (const auto& [w, d] : p2.terms()) out.add({u, v, w}, cab * d);
          }
        }
      }
    }
  }
  return out;
}

Element Algebra::multiply_slots(const TensorElement& t) const {
  if (t.rank() != 2) throw StructuralError("multiplication map needs a rank-2 tensor");
  Element out(space_);
  for (const auto& [k, c] : t.terms()) out += mul_monomials(k[0], k[1]).scaled(c);
  return out;
}

std::shared_ptr<Algebra> Algebra::map_coefficients(
    const SpacePtr& target, const std::function<Series(const Series&)>& f) const {
  auto out = std::make_shared<Algebra>(gens_, target);
  out->step_budget_ = step_budget_;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!has_rewrite(i, j) && !resolver_) continue;
      out->table_[out->slot(i, j)] = rewrite(i, j).map_coefficients(target, f);
    }
  }
  return out;
}

std::shared_ptr<Algebra> Algebra::with_generators(GeneratorSet gens) const {
  if (gens.size() != gens_.size()) throw StructuralError("generator count mismatch");
  auto out = std::make_shared<Algebra>(*this);
  out->gens_ = std::move(gens);
  return out;
}

// ---------------------------------------------------------------------------
// GeneratorMap

GeneratorMap::GeneratorMap(const Algebra& target, std::vector<Element> images)
    : target_(target), images_(std::move(images)) {
  for (const auto& x : images_) {
    if (!same_space(x.space(), target.space())) {
      throw StructuralError("generator image not in the target algebra's space");
    }
  }
}

Element GeneratorMap::image(const Monomial& m) const {
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  Element out(target_.space());
  if (m.is_unit()) {
    out = target_.one();
  } else {
    const std::size_t f = m.first();
    if (f >= images_.size()) throw StructuralError("generator map has no image for a generator");
    Monomial rest = m;
    --rest.e[f];
    out = target_.mul(images_[f], image(rest));
  }
  return memo_.emplace(m, std::move(out)).first->second;
}

Element GeneratorMap::apply(const Element& x) const {
  Element out(target_.space());
  for (const auto& [m, c] : x.terms()) out += image(m).scaled(c);
  return out;
}

TensorElement GeneratorMap::apply(const TensorElement& x) const {
  TensorElement out(target_.space(), x.rank());
  for (const auto& [k, c] : x.terms()) {
    if (x.rank() == 2) {
      out += TensorElement::pure(image(k[0]), image(k[1])).scaled(c);
    } else {
      out += TensorElement::pure(image(k[0]), image(k[1]), image(k[2])).scaled(c);
    }
  }
  return out;
}

}  // namespace hopfc
