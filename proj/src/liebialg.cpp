#include "hopfc/liebialg.hpp"

#include "hopfc/errors.hpp"

namespace hopfc {

LieStructure::LieStructure(GeneratorSet gens)
    : gens_(std::move(gens)), table_(gens_.size() * gens_.size()) {}

void LieStructure::set_bracket(std::string_view x, std::string_view y, const LieVector& rhs) {
  const std::size_t i = gens_.require(x);
  const std::size_t j = gens_.require(y);
  if (i == j) throw StructuralError("bracket of a generator with itself");
  LieVector neg;
  for (const auto& [k, c] : rhs) {
    if (k >= size()) throw StructuralError("bracket value outside the generator set");
    if (!c.is_zero()) neg[k] = -c;
  }
  LieVector pos;
  for (const auto& [k, c] : neg) pos[k] = -c;
  table_[i * size() + j] = pos;
  table_[j * size() + i] = neg;
}

const LieVector& LieStructure::bracket(std::size_t i, std::size_t j) const {
  return table_.at(i * size() + j);
}

// ---------------------------------------------------------------------------
// WedgeTensor

void WedgeTensor::add(std::size_t i, std::size_t j, const Series& c) {
  if (i == j || c.is_zero()) return;
  if (!same_space(c.space(), space_)) throw StructuralError("wedge coefficient space mismatch");
  const Series v = i < j ? c : -c;
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  auto [it, inserted] = terms_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WedgeTensor& WedgeTensor::operator+=(const WedgeTensor& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

WedgeTensor& WedgeTensor::operator-=(const WedgeTensor& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

WedgeTensor WedgeTensor::scaled(const Series& c) const {
  WedgeTensor w(space_);
  for (const auto& [k, v] : terms_) w.add(k.first, k.second, v * c);
  return w;
}

Series WedgeTensor::coefficient(std::size_t i, std::size_t j) const {
  if (i == j) return Series(space_);
  auto it = terms_.find({std::min(i, j), std::max(i, j)});
  if (it == terms_.end()) return Series(space_);
  return i < j ? it->second : -it->second;
}

WedgeTensor WedgeTensor::map_coefficients(const SpacePtr& target,
                                          const std::function<Series(const Series&)>& f) const {
  WedgeTensor w(target);
  for (const auto& [k, c] : terms_) w.add(k.first, k.second, f(c));
  return w;
}

bool operator==(const WedgeTensor& a, const WedgeTensor& b) {
  return same_space(a.space_, b.space_) && a.terms_ == b.terms_;
}

namespace {

std::string with_sign(const Series& c, bool leading) {
  std::string s = c.str();
  if (c.size() > 1) s = "(" + s + ")";
  if (leading) return s;
  if (!s.empty() && s[0] == '-') return " - " + s.substr(1);
  return " + " + s;
}

}  // namespace

std::string WedgeTensor::str(const GeneratorSet& gens) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    out += with_sign(c, out.empty()) + "*" + gens.name(k.first) + "^" + gens.name(k.second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor3

void Tensor3::add(const std::array<std::size_t, 3>& k, const Series& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

std::string Tensor3::str(const GeneratorSet& gens) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    out += with_sign(c, out.empty()) + "*" + gens.name(k[0]) + "(x)" + gens.name(k[1]) + "(x)" +
           gens.name(k[2]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operations

WedgeTensor ad_action(const LieStructure& L, std::size_t x, const WedgeTensor& w) {
  WedgeTensor out(w.space());
  for (const auto& [k, c] : w.terms()) {
    for (const auto& [m, b] : L.bracket(x, k.first)) out.add(m, k.second, c.scaled(b));
    for (const auto& [m, b] : L.bracket(x, k.second)) out.add(k.first, m, c.scaled(b));
  }
  return out;
}

WedgeTensor ad_action(const LieStructure& L, const LieVector& x, const WedgeTensor& w) {
  WedgeTensor out(w.space());
  for (const auto& [i, c] : x) out += ad_action(L, i, w).scaled(Series::constant(w.space(), c));
  return out;
}

Cocommutator cocommutator_from_r(const LieStructure& L, const WedgeTensor& r) {
  Cocommutator d;
  for (std::size_t i = 0; i < L.size(); ++i) d.push_back(ad_action(L, i, r));
  return d;
}

std::map<std::string, WedgeTensor> cocycle_residuals(const LieStructure& L,
                                                     const Cocommutator& d) {
  std::map<std::string, WedgeTensor> out;
  if (d.size() != L.size()) throw StructuralError("cocommutator size mismatch");
  const SpacePtr& sp = d.front().space();
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (std::size_t j = i + 1; j < L.size(); ++j) {
      WedgeTensor res(sp);
      for (const auto& [k, c] : L.bracket(i, j)) res += d[k].scaled(Series::constant(sp, c));
      res -= ad_action(L, i, d[j]);
      res += ad_action(L, j, d[i]);
      if (!res.is_zero()) {
        out.emplace("[" + L.generators().name(i) + ", " + L.generators().name(j) + "]", res);
      }
    }
  }
  return out;
}

std::map<std::string, Tensor3> cojacobi_residuals(const LieStructure& L, const Cocommutator& d) {
  std::map<std::string, Tensor3> out;
  if (d.size() != L.size()) throw StructuralError("cocommutator size mismatch");
  const SpacePtr& sp = d.front().space();
  for (std::size_t x = 0; x < L.size(); ++x) {
    // (delta (x) id) delta(X) as a dense rank-3 tensor.
    Tensor3 t(sp);
    for (const auto& [k, c] : d[x].terms()) {
      // c (X_a (x) X_b - X_b (x) X_a)
      const std::size_t a = k.first, b = k.second;
      for (const auto& [k2, c2] : d[a].terms()) {
        t.add({k2.first, k2.second, b}, c * c2);
        t.add({k2.second, k2.first, b}, -(c * c2));
      }
      for (const auto& [k2, c2] : d[b].terms()) {
        t.add({k2.first, k2.second, a}, -(c * c2));
        t.add({k2.second, k2.first, a}, c * c2);
      }
    }
    Tensor3 cyc(sp);
    for (const auto& [k, c] : t.terms()) {
      cyc.add(k, c);
      cyc.add({k[2], k[0], k[1]}, c);
      cyc.add({k[1], k[2], k[0]}, c);
    }
    if (!cyc.is_zero()) out.emplace(L.generators().name(x), cyc);
  }
  return out;
}

Tensor3 schouten_bracket(const LieStructure& L, const WedgeTensor& r) {
  const SpacePtr& sp = r.space();
  const std::size_t n = L.size();
  Tensor3 out(sp);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Series rab = r.coefficient(a, b);
      if (rab.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const Series rcd = r.coefficient(c, d);
          if (rcd.is_zero()) continue;
          const Series w = rab * rcd;
          // [r12, r13] = r^ab r^cd [X_a, X_c] (x) X_b (x) X_d
          for (const auto& [m, v] : L.bracket(a, c)) out.add({m, b, d}, w.scaled(v));
          // [r12, r23] = r^ab r^cd X_a (x) [X_b, X_c] (x) X_d
          for (const auto& [m, v] : L.bracket(b, c)) out.add({a, m, d}, w.scaled(v));
          // [r13, r23] = r^ab r^cd X_a (x) X_c (x) [X_b, X_d]
          for (const auto& [m, v] : L.bracket(b, d)) out.add({a, c, m}, w.scaled(v));
        }
      }
    }
  }
  return out;
}

Tensor3 ad_action(const LieStructure& L, std::size_t x, const Tensor3& t) {
  Tensor3 out(t.space());
  for (const auto& [k, c] : t.terms()) {
    for (std::size_t slot = 0; slot < 3; ++slot) {
      for (const auto& [m, v] : L.bracket(x, k[slot])) {
        auto key = k;
        key[slot] = m;
        out.add(key, c.scaled(v));
      }
    }
  }
  return out;
}

bool is_ad_invariant(const LieStructure& L, const Tensor3& t) {
  if (t.is_zero()) return true;
  for (std::size_t x = 0; x < L.size(); ++x) {
    if (!ad_action(L, x, t).is_zero()) return false;
  }
  return true;
}

LieStructure gl2_lie() {
  LieStructure L(GeneratorSet({"I", "J+", "J3", "J-"}, {true, false, false, false}));
  L.set_bracket("J3", "J+", {{1, Rational(2)}});
  L.set_bracket("J3", "J-", {{3, Rational(-2)}});
  L.set_bracket("J+", "J-", {{2, Rational(1)}});
  return L;
}

LieStructure h4_lie() {
  LieStructure L(GeneratorSet({"M", "A+", "N", "A-"}, {true, false, false, false}));
  L.set_bracket("N", "A+", {{1, Rational(1)}});
  L.set_bracket("N", "A-", {{3, Rational(-1)}});
  L.set_bracket("A-", "A+", {{0, Rational(1)}});
  return L;
}

}  // namespace hopfc
