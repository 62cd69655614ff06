#pragma once

// Truncated multivariate formal series with exact rational coefficients.
//
// A Series lives in a ParamSpace: an ordered list of deformation symbols,
// each carrying a truncation weight and an allowed exponent window. Every
// stored term has weighted degree <= order. The contraction parameter
// "eps" has weight 0 and a negative floor, so it behaves as a Laurent
// variable whose valuation is tracked exactly.

#include <array>
#include <climits>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfc/rational.hpp"

namespace hopfc {

inline constexpr std::size_t kMaxSymbols = 8;
inline constexpr int kUncapped = 120;
inline constexpr std::string_view kEps = "eps";

using Exponents = std::array<std::int8_t, kMaxSymbols>;

struct Symbol {
  std::string name;
  int weight = 1;
  /// Lowest admissible exponent; negative marks the symbol invertible.
  int floor = 0;
  /// Terms with a larger exponent are dropped, exactly like overweight terms.
  int cap = kUncapped;
  /// Ratio symbols (weight 0) stand for ratio_num / ratio_den.
  std::string ratio_num;
  std::string ratio_den;

  bool is_ratio() const { return !ratio_num.empty(); }
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class ParamSpace;
using SpacePtr = std::shared_ptr<const ParamSpace>;

class ParamSpace {
 public:
  static SpacePtr make(std::vector<Symbol> symbols, int order);
  /// Symbols of unit weight, no ratio or Laurent behaviour.
  static SpacePtr plain(const std::vector<std::string>& names, int order);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  int order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;
  bool has(std::string_view name) const { return index_of(name).has_value(); }
  std::vector<std::string> names() const;

  SpacePtr with_order(int order) const;
  SpacePtr without(std::string_view name) const;
  /// Union of two spaces (symbols of `a` first); shared names must agree.
  static SpacePtr merge(const ParamSpace& a, const ParamSpace& b);

  int weighted_degree(const Exponents& e) const;

  friend bool operator==(const ParamSpace& a, const ParamSpace& b) {
    return a.order_ == b.order_ && a.symbols_ == b.symbols_;
  }

 private:
  ParamSpace(std::vector<Symbol> symbols, int order);

  std::vector<Symbol> symbols_;
  int order_;
};

bool same_space(const SpacePtr& a, const SpacePtr& b);

class Series {
 public:
  using Term = std::pair<Exponents, Rational>;

  explicit Series(SpacePtr space);
  static Series constant(SpacePtr space, const Rational& c);
  static Series symbol(SpacePtr space, std::string_view name, int power = 1,
                       const Rational& coeff = 1);
  static Series monomial(SpacePtr space, const Exponents& e, const Rational& coeff);
  /// Normalizes: merges duplicates, drops zeros and truncated terms, checks floors.
  static Series from_terms(SpacePtr space, std::vector<Term> terms);

  const SpacePtr& space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational constant_term() const;
  bool is_constant() const;
  /// Minimum weighted degree over the stored terms; INT_MAX for zero.
  int min_weight() const;
  /// Minimum exponent of a symbol over the stored terms; 0 for zero.
  int min_exponent(std::size_t symbol) const;
  int max_exponent(std::size_t symbol) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  Series operator-() const;
  Series scaled(const Rational& c) const;
  Series pow(int k) const;

  friend bool operator==(const Series& a, const Series& b);

  /// Human-readable form, e.g. "1 + 1/2*a + 1/6*a^2".
  std::string str() const;

 private:
  SpacePtr space_;
  std::vector<Term> terms_;  // sorted by exponent vector
};

using SymbolMap = std::map<std::string, Series, std::less<>>;

/// Simultaneous substitution of symbols by series in `target`. Symbols not in
/// `sigma` are carried over by name.
Series substitute(const Series& x, const SymbolMap& sigma, const SpacePtr& target);

/// Re-expresses `x` in `target`, matching symbols by name.
Series rebase(const Series& x, const SpacePtr& target);

/// The eps^0 slice of `x`, in `target` (default: the space without eps).
/// Throws DivergenceError listing terms with a negative eps exponent.
Series eps_limit(const Series& x, const SpacePtr& target = nullptr);

/// True when no term has a negative eps exponent.
bool eps_finite(const Series& x);

/// Sets `name` to zero: keeps the terms free of it. Negative powers throw
/// DivergenceError.
Series slice_zero(const Series& x, std::string_view name);

enum class Analytic {
  exp,
  sinh_over_arg,           // sinh(x)/x
  expm1_over_arg,          // (e^x - 1)/x
  cosh,
  cosh_minus_one,          // cosh(x) - 1
  cosh_minus_one_over_sq,  // (cosh(x) - 1)/x^2
  arg_coth,                // x/tanh(x)
};

std::string_view analytic_name(Analytic kind);
std::optional<Analytic> analytic_from_name(std::string_view name);

/// Taylor coefficients c_0 .. c_{count-1} of the named function.
std::vector<Rational> taylor_coefficients(Analytic kind, int count);

/// Taylor expansion of f(arg), truncated. Requires every term of `arg` to carry
/// strictly positive weight.
Series analytic_series(Analytic kind, const Series& arg);

}  // namespace hopfc
