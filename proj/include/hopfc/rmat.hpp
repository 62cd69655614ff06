#pragma once

// Finite R-matrices on C^2 (x) C^2 with Series entries.
//
// Basis order is e1(x)e1, e1(x)e2, e2(x)e1, e2(x)e2; on the triple product
// the index of e_i(x)e_j(x)e_k is 4i + 2j + k.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hopfc/liebialg.hpp"
#include "hopfc/series.hpp"

namespace hopfc {

/// Dense square matrix of series.
class Matrix {
 public:
  Matrix(SpacePtr space, std::size_t n);
  static Matrix identity(SpacePtr space, std::size_t n);

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return n_; }
  Series& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Series& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Series& c) const;
  Matrix map_entries(const SpacePtr& target, const std::function<Series(const Series&)>& f) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Nonzero entries as "(i,j): value" lines.
  std::vector<std::string> nonzero_entries() const;

 private:
  SpacePtr space_;
  std::size_t n_;
  std::vector<Series> e_;
};

/// A 4x4 matrix on C^2 (x) C^2.
using RMat = Matrix;

/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

/// R12 R13 R23 - R23 R13 R12 as an 8x8 matrix.
Matrix qybe_residual(const RMat& r);

/// R21 = P R P with P the flip.
RMat flip(const RMat& r);
/// R21 R - 1.
Matrix triangularity_residual(const RMat& r);

/// 2x2 rational matrix per Lie generator.
using Rep2 = std::vector<std::array<Rational, 4>>;
/// I = 1, J+ = e12, J3 = diag(1, -1), J- = e21 on (I, J+, J3, J-).
Rep2 gl2_fundamental();

/// r evaluated in rep (x) rep.
RMat wedge_rep(const WedgeTensor& r, const Rep2& rep);
/// exp of wedge_rep(r); every entry of r must have positive weight.
RMat exp_wedge_rep(const WedgeTensor& r, const Rep2& rep);

/// Zero-slice of every entry in `param`, in the space without it.
RMat rmat_limit(const RMat& r, std::string_view param);

/// Names of the printed R-matrices (keyed by their algebra).
std::vector<std::string> rmatrix_names();
/// Printed matrix with q = e^a, h, p expanded as series in (a, a_plus) or (b, b_plus).
RMat printed_rmatrix(std::string_view name, int order);
/// Printed matrix over independent symbols Q, h or B, p (Q, B invertible),
/// with an order high enough that no product in the checks is truncated.
RMat printed_rmatrix_exact(std::string_view name);

}  // namespace hopfc
