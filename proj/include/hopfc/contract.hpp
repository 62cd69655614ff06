#pragma once

// Generalized contractions gl(2) -> h4 driven by a small parameter eps.
//
// Generators are rescaled by
//   M = eps^2 I,  A+ = eps J+,  N = (J3 + I)/2,  A- = eps J-
// and every deformation parameter p by p = c eps^n p', where p' is the
// contracted parameter. The classical layer finds the smallest n keeping the
// r-matrix (and separately the cocommutator) finite; the quantum layer then
// pushes the whole Hopf structure through the map and takes eps -> 0.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfc/hopf.hpp"
#include "hopfc/liebialg.hpp"

namespace hopfc {

/// old = coeff * eps^exponent * target
struct ParamImage {
  std::string old_param;
  Rational coeff;
  int exponent = 0;
  std::string target;
};

enum class Counterterm {
  central_square,    // I^2
  sinh_half_square,  // (sinh(a I/2)/(a/2))^2
};

/// Casimir of the target: lim eps^power (alpha C + beta counterterm).
struct CasimirLimit {
  int eps_power = 2;
  Rational alpha;
  Rational beta;
  Counterterm counterterm = Counterterm::central_square;
};

struct ContractionCase {
  std::string name;
  std::string title;
  std::string source;  // catalog presentation
  std::string target;  // catalog presentation
  std::vector<ParamImage> params;
  /// Parameters sharing a target are solved with one common exponent.
  bool correlated = false;
  CasimirLimit casimir;
  /// Catalog presentation reached after the primed change of basis, if any.
  std::string after_basis_change;
};

/// Linear change of generators on the classical layer.
struct ScalingMap {
  /// forward[k]: new generator k in old generators.
  std::vector<std::map<std::size_t, Series>> forward;
  /// inverse[i]: old generator i in new generators.
  std::vector<std::map<std::size_t, Series>> inverse;

  /// The gl(2) -> h4 map above, with coefficients in `space` (which holds eps).
  static ScalingMap standard(const SpacePtr& space);
  /// True when inverse o forward and forward o inverse are both the identity.
  bool round_trip() const;
};

/// The eps symbol used by every contraction space.
Symbol eps_symbol(int floor, int cap);

/// r expressed in the new generators, after substituting parameters.
WedgeTensor transform_r(const WedgeTensor& r, const ScalingMap& s, const SymbolMap& sigma,
                        const SpacePtr& target);
/// delta'(Y_k) = (phi (x) phi) delta(forward Y_k).
Cocommutator transform_delta(const Cocommutator& d, const ScalingMap& s, const SymbolMap& sigma,
                             const SpacePtr& target);

enum class SolveMode { independent, correlated };

struct ExponentEntry {
  std::vector<std::string> params;
  std::string target;
  std::optional<int> r_min;  // nullopt: unconstrained
  std::optional<int> delta_min;
};

struct ExponentSolution {
  SolveMode mode = SolveMode::independent;
  std::vector<ExponentEntry> entries;

  /// r-minima equal delta-minima for every entry.
  bool coboundary() const;
  std::optional<int> r_min(std::string_view param) const;
  std::optional<int> delta_min(std::string_view param) const;
};

/// Scans exponents for each parameter group; other parameters are set to zero.
ExponentSolution solve_min_exponents(const LieStructure& lie, const WedgeTensor& r,
                                     const std::vector<ParamImage>& params, SolveMode mode);

/// eps -> 0 limit of r under the case's parameter map (throws DivergenceError).
WedgeTensor contracted_r(const LieStructure& lie, const WedgeTensor& r,
                         const std::vector<ParamImage>& params);

/// Presentation generated by host elements `forward` (one per new generator);
/// `inverse` gives every host generator as an element over `gens`.
HopfPresentation induce_presentation(const HopfPresentation& host, std::string name,
                                     GeneratorSet gens, const std::vector<Element>& forward,
                                     const std::vector<Element>& inverse);

/// Full quantum contraction including the Casimir prescription.
HopfPresentation contract_hopf(const ContractionCase& c, int order);
Element contract_casimir(const ContractionCase& c, int order);
/// Same, starting from an explicit source presentation instead of the catalog entry.
HopfPresentation contract_hopf(const ContractionCase& c, const HopfPresentation& source, int order);

/// Compares relations, coproducts, counits and Casimirs term by term after
/// expressing `got` in the parameter space of `want`.
CheckResult match_presentation(const HopfPresentation& got, const HopfPresentation& want);

/// Rewrites `h` in generators Y_k = forward[k]; inverse[i] is X_i in the Y's.
/// Throws NonInvertibleError when the two maps are not mutually inverse.
HopfPresentation change_of_basis(const HopfPresentation& h, const std::vector<Element>& forward,
                                 const std::vector<Element>& inverse);

}  // namespace hopfc
