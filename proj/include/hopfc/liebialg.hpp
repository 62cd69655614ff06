#pragma once

// Classical layer: Lie brackets with rational structure constants, wedge
// tensors with Series coefficients, cocommutators and their axioms.
//
// Conventions: X ^ Y = X (x) Y - Y (x) X and delta(X) = [X (x) 1 + 1 (x) X, r].

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hopfc/pbw.hpp"

namespace hopfc {

/// Linear combination of generators with rational coefficients.
using LieVector = std::map<std::size_t, Rational>;

class LieStructure {
 public:
  explicit LieStructure(GeneratorSet gens);

  const GeneratorSet& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  /// Records [X, Y] = rhs (and [Y, X] = -rhs).
  void set_bracket(std::string_view x, std::string_view y, const LieVector& rhs);
  const LieVector& bracket(std::size_t i, std::size_t j) const;

 private:
  GeneratorSet gens_;
  std::vector<LieVector> table_;
};

/// Antisymmetric 2-tensor stored on pairs i < j: sum c_ij X_i ^ X_j.
class WedgeTensor {
 public:
  explicit WedgeTensor(SpacePtr space) : space_(std::move(space)) {}

  const SpacePtr& space() const { return space_; }
  const std::map<std::pair<std::size_t, std::size_t>, Series>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c X_i ^ X_j for any i, j (reordered with a sign, diagonal dropped).
  void add(std::size_t i, std::size_t j, const Series& c);
  WedgeTensor& operator+=(const WedgeTensor& o);
  WedgeTensor& operator-=(const WedgeTensor& o);
  WedgeTensor scaled(const Series& c) const;
  Series coefficient(std::size_t i, std::size_t j) const;
  WedgeTensor map_coefficients(const SpacePtr& target,
                               const std::function<Series(const Series&)>& f) const;

  friend bool operator==(const WedgeTensor&, const WedgeTensor&);
  std::string str(const GeneratorSet& gens) const;

 private:
  SpacePtr space_;
  std::map<std::pair<std::size_t, std::size_t>, Series> terms_;
};

using Cocommutator = std::vector<WedgeTensor>;

/// Dense rank-3 tensor on Lie generators.
class Tensor3 {
 public:
  explicit Tensor3(SpacePtr space) : space_(std::move(space)) {}

  const SpacePtr& space() const { return space_; }
  const std::map<std::array<std::size_t, 3>, Series>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const std::array<std::size_t, 3>& k, const Series& c);
  Tensor3& operator+=(const Tensor3& o);
  std::string str(const GeneratorSet& gens) const;

 private:
  SpacePtr space_;
  std::map<std::array<std::size_t, 3>, Series> terms_;
};

/// ad_X on a wedge: [X, Y] ^ Z + Y ^ [X, Z].
WedgeTensor ad_action(const LieStructure& L, std::size_t x, const WedgeTensor& w);
/// ad_X on a linear combination of generators, coefficient-wise.
WedgeTensor ad_action(const LieStructure& L, const LieVector& x, const WedgeTensor& w);

Cocommutator cocommutator_from_r(const LieStructure& L, const WedgeTensor& r);

/// Residuals of delta([X,Y]) - ad_X delta(Y) + ad_Y delta(X), keyed "[X, Y]".
std::map<std::string, WedgeTensor> cocycle_residuals(const LieStructure& L,
                                                     const Cocommutator& d);
/// Residuals of the cyclic sum of (delta (x) id) delta(X), keyed by X.
std::map<std::string, Tensor3> cojacobi_residuals(const LieStructure& L, const Cocommutator& d);

/// [[r, r]] = [r12, r13] + [r12, r23] + [r13, r23].
Tensor3 schouten_bracket(const LieStructure& L, const WedgeTensor& r);
/// ad_X on a rank-3 tensor (sum over the three slots).
Tensor3 ad_action(const LieStructure& L, std::size_t x, const Tensor3& t);
bool is_ad_invariant(const LieStructure& L, const Tensor3& t);

/// Undeformed gl(2) on (I, J+, J3, J-) and h4 on (M, A+, N, A-).
LieStructure gl2_lie();
LieStructure h4_lie();

}  // namespace hopfc
