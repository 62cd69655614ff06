#pragma once

// The fixed algebras, classical r-matrices, 4x4 R-matrices and contraction
// cases the engine knows about.
//
// Quotients of deformation parameters are encoded by weight-0 ratio symbols:
//   kappa  = a_plus / a       (gl2.Iplus.standard)
//   lambda = b_plus / a_plus  (gl2.Iplus.nonstandard)
//   mu     = beta_plus / xi   (h4.betaplus.xi)
// Generator names are ASCII: I, J+, J3, J3', J- and M, A+, N, A-.

#include <string>
#include <string_view>
#include <vector>

#include "hopfc/contract.hpp"
#include "hopfc/hopf.hpp"
#include "hopfc/liebialg.hpp"

namespace hopfc::catalog {

inline constexpr std::string_view kVersion = "1.0.0";
inline constexpr int kDefaultOrder = 4;

/// Names of every Hopf presentation, gl(2) side first.
std::vector<std::string> presentation_names();

/// Builds the named presentation truncated at `order`. Throws LookupError.
HopfPresentation presentation(std::string_view name, int order = kDefaultOrder);

/// Name of the undeformed presentation a quantum entry reduces to.
std::string classical_counterpart(std::string_view name);

/// Parameter space of the classical r-matrices: a_plus, a, b_plus, b.
SpacePtr lie_space(int order = 2);

/// Classical r-matrix of a gl(2) entry on (I, J+, J3, J-), zero for gl2.classical.
WedgeTensor classical_r(std::string_view name, int order = 2);

/// The four deformed contraction cases.
std::vector<ContractionCase> list_cases();
/// Any case of list_cases(), or "classical" for the undeformed contraction.
ContractionCase find_case(std::string_view name);

struct BasisChange {
  std::vector<Element> forward;  // new generators in old
  std::vector<Element> inverse;  // old generators in new
};

/// N' = N + mu A+, A-' = A- + mu sinh(xi M/2)/(xi/2) on h4.betaplus.xi.
BasisChange primed_basis(const HopfPresentation& h4_betaplus_xi);

}  // namespace hopfc::catalog
