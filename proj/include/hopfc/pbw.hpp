#pragma once

// Noncommutative algebras presented by PBW rewrite rules.
//
// Generators are totally ordered; an ordered monomial X_0^{e_0} ... X_{n-1}^{e_{n-1}}
// is stored as its exponent vector. For every out-of-order pair X_i X_j (i > j)
// the table holds R_ij with X_i X_j = X_j X_i + R_ij. Products of ordered
// monomials are reduced to normal form by recursive left multiplication with a
// memo cache.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopfc/series.hpp"

namespace hopfc {

inline constexpr std::size_t kMaxGenerators = 8;
inline constexpr long kDefaultStepBudget = 1'000'000;

/// Global default rewrite budget; the CLI overrides it from HOPFC_STEP_BUDGET.
long default_step_budget();
void set_default_step_budget(long steps);

class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(std::vector<std::string> names, std::vector<bool> central);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool central(std::size_t i) const { return central_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<bool> central_;
};

struct Monomial {
  std::array<std::uint8_t, kMaxGenerators> e{};

  static Monomial unit() { return {}; }
  static Monomial gen(std::size_t i, int power = 1);

  int degree() const;
  bool is_unit() const { return degree() == 0; }
  /// Index of the first (smallest) generator present; size() if unit.
  std::size_t first() const;
  /// Index of the last (largest) generator present.
  std::size_t last() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Degree first, then reverse-lexicographic on exponents.
  friend bool operator<(const Monomial& a, const Monomial& b);
};

std::string monomial_str(const GeneratorSet& gens, const Monomial& m);

/// Finite combination of ordered monomials with Series coefficients.
class Element {
 public:
  explicit Element(SpacePtr space) : space_(std::move(space)) {}
  static Element constant(const SpacePtr& space, const Series& c);
  static Element constant(const SpacePtr& space, const Rational& c);
  static Element monomial(const SpacePtr& space, const Monomial& m, const Series& c);
  static Element generator(const SpacePtr& space, std::size_t i);

  const SpacePtr& space() const { return space_; }
  const std::map<Monomial, Series>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Series coefficient(const Monomial& m) const;
  int max_degree() const;

  /// Adds c * m.
  void add(const Monomial& m, const Series& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  Element scaled(const Series& c) const;
  Element scaled(const Rational& c) const;
  /// Applies `f` to every coefficient, producing an element in `target`.
  Element map_coefficients(const SpacePtr& target,
                           const std::function<Series(const Series&)>& f) const;

  friend bool operator==(const Element& a, const Element& b);

  std::string str(const GeneratorSet& gens) const;

 private:
  SpacePtr space_;
  std::map<Monomial, Series> terms_;
};

using Word = std::vector<std::size_t>;
using TensorKey = std::array<Monomial, 3>;

/// Element of the rank-2 or rank-3 tensor power, slot-wise PBW ordered.
class TensorElement {
 public:
  TensorElement(SpacePtr space, int rank);
  static TensorElement pure(const Element& a, const Element& b);
  static TensorElement pure(const Element& a, const Element& b, const Element& c);

  const SpacePtr& space() const { return space_; }
  int rank() const { return rank_; }
  const std::map<TensorKey, Series>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const TensorKey& k, const Series& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  TensorElement operator-() const;
  TensorElement scaled(const Series& c) const;
  TensorElement map_coefficients(const SpacePtr& target,
                                 const std::function<Series(const Series&)>& f) const;
  /// Swaps slots 0 and 1 (rank 2 only).
  TensorElement flipped() const;

  friend bool operator==(const TensorElement& a, const TensorElement& b);

  std::string str(const GeneratorSet& gens) const;

 private:
  SpacePtr space_;
  int rank_;
  std::map<TensorKey, Series> terms_;
};

/// An associative algebra given by generators and a PBW rewrite table.
///
/// The table may be filled eagerly with set_commutator, or lazily through a
/// resolver that is consulted the first time a pair is needed. After
/// construction the algebra is used as an immutable value; the memo caches
/// are internal and guarded by a mutex.
class Algebra {
 public:
  using Resolver = std::function<Element(std::size_t i, std::size_t j)>;

  Algebra(GeneratorSet gens, SpacePtr space);
  Algebra(const Algebra& o);
  ~Algebra();
  Algebra& operator=(const Algebra&) = delete;

  const GeneratorSet& generators() const { return gens_; }
  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return gens_.size(); }

  /// Records [X, Y] = rhs for generator indices x != y.
  void set_commutator(std::size_t x, std::size_t y, const Element& rhs);
  void set_commutator(std::string_view x, std::string_view y, const Element& rhs);
  void set_resolver(Resolver r);
  void set_step_budget(long steps) { step_budget_ = steps; }

  /// R_ij for i > j: X_i X_j = X_j X_i + R_ij.
  Element rewrite(std::size_t i, std::size_t j) const;
  bool has_rewrite(std::size_t i, std::size_t j) const;

  Element gen(std::size_t i) const { return Element::generator(space_, i); }
  Element gen(std::string_view name) const { return gen(gens_.require(name)); }
  Element one() const { return Element::constant(space_, Rational(1)); }
  Element constant(const Series& c) const { return Element::constant(space_, c); }
  Series scalar(const Rational& c) const { return Series::constant(space_, c); }
  Series param(std::string_view name, int power = 1) const {
    return Series::symbol(space_, name, power);
  }

  Element mul(const Element& x, const Element& y) const;
  Element mul(std::initializer_list<Element> factors) const;
  Element mul_monomials(const Monomial& u, const Monomial& v) const;
  Element commutator(const Element& x, const Element& y) const;
  Element pow(const Element& x, int k) const;

  /// Normal form of a raw word of generator indices.
  Element normal_form(const Word& w) const;
  /// Normal form after forcing the first rewrite at adjacent position `pos`
  /// (which must be a descent).
  Element normal_form(const Word& w, std::size_t pos) const;

  /// Taylor expansion f(arg) with each power normal-formed.
  Element function(Analytic kind, const Element& arg) const;

  TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) const;
  /// Multiplication map m: A (x) A -> A.
  Element multiply_slots(const TensorElement& t) const;

  /// Copy with every coefficient mapped into `target` (table included).
  std::shared_ptr<Algebra> map_coefficients(
      const SpacePtr& target, const std::function<Series(const Series&)>& f) const;
  /// Copy whose central flags are replaced.
  std::shared_ptr<Algebra> with_generators(GeneratorSet gens) const;

  /// Steps used by the last top-level call (diagnostic).
  long steps_used() const;

 private:
  struct Cache;

  std::size_t slot(std::size_t i, std::size_t j) const { return i * gens_.size() + j; }
  Element left_mul_gen(std::size_t g, const Monomial& m) const;
  Element mul_element_monomial(const Element& x, const Monomial& m) const;
  void check_element(const Element& x) const;

  GeneratorSet gens_;
  SpacePtr space_;
  mutable std::vector<std::optional<Element>> table_;
  Resolver resolver_;
  long step_budget_;
  mutable std::recursive_mutex mutex_;
  mutable std::unique_ptr<Cache> cache_;
};

/// A homomorphism given by the images of generators in a target algebra.
class GeneratorMap {
 public:
  GeneratorMap(const Algebra& target, std::vector<Element> images);

  const std::vector<Element>& images() const { return images_; }
  /// Image of an element whose coefficients already live in the target space.
  Element apply(const Element& x) const;
  TensorElement apply(const TensorElement& x) const;
  Element image(const Monomial& m) const;

 private:
  const Algebra& target_;
  std::vector<Element> images_;
  mutable std::map<Monomial, Element> memo_;
};

}  // namespace hopfc
