#include "hopfc/rmat.hpp"

#include "hopfc/catalog.hpp"
#include "hopfc/errors.hpp"

namespace hopfc {

Matrix::Matrix(SpacePtr space, std::size_t n)
    : space_(std::move(space)), n_(n), e_(n * n, Series(space_)) {}

Matrix Matrix::identity(SpacePtr space, std::size_t n) {
  Matrix m(space, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Series::constant(space, 1);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (n_ != o.n_) throw StructuralError("matrix size mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (n_ != o.n_) throw StructuralError("matrix size mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw StructuralError("matrix size mismatch");
  const std::size_t n = a.n_;
  Matrix c(a.space_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Series& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

Matrix Matrix::scaled(const Series& c) const {
  Matrix m(space_, n_);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * c;
  return m;
}

Matrix Matrix::map_entries(const SpacePtr& target,
                           const std::function<Series(const Series&)>& f) const {
  Matrix m(target, n_);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = f(e_[k]);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

std::vector<std::string> Matrix::nonzero_entries() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(*this)(i, j).is_zero()) {
        out.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      "): " + (*this)(i, j).str());
      }
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim(), m = b.dim();
  Matrix c(a.space(), n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          if (!b(k, l).is_zero()) c(i * m + k, j * m + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return c;
}

namespace {

void require_four(const RMat& r) {
  if (r.dim() != 4) throw StructuralError("R-matrix must be 4x4");
}

// Permutation matrix of a map on basis indices.
template <class F>
Matrix permutation(const SpacePtr& sp, std::size_t n, F&& sigma) {
  Matrix p(sp, n);
  for (std::size_t i = 0; i < n; ++i) p(sigma(i), i) = Series::constant(sp, 1);
  return p;
}

}  // namespace

Matrix qybe_residual(const RMat& r) {
  require_four(r);
  const SpacePtr& sp = r.space();
  const Matrix id2 = Matrix::identity(sp, 2);
  const Matrix r12 = kron(r, id2);
  const Matrix r23 = kron(id2, r);
  // Swap of the last two tensor factors.
  const Matrix p23 = permutation(sp, 8, [](std::size_t i) {
    return (i & 4) | ((i & 1) << 1) | ((i & 2) >> 1);
  });
  const Matrix r13 = p23 * r12 * p23;
  return r12 * r13 * r23 - r23 * r13 * r12;
}

RMat flip(const RMat& r) {
  require_four(r);
  const Matrix p = permutation(r.space(), 4, [](std::size_t i) { return ((i & 1) << 1) | (i >> 1); });
  return p * r * p;
}

Matrix triangularity_residual(const RMat& r) {
  return flip(r) * r - Matrix::identity(r.space(), 4);
}

Rep2 gl2_fundamental() {
  const Rational o(0), l(1), m(-1);
  return {{l, o, o, l}, {o, l, o, o}, {l, o, o, m}, {o, o, l, o}};
}

RMat wedge_rep(const WedgeTensor& r, const Rep2& rep) {
  const SpacePtr& sp = r.space();
  auto as_matrix = [&](std::size_t g) {
    Matrix m(sp, 2);
    for (std::size_t k = 0; k < 4; ++k) m(k / 2, k % 2) = Series::constant(sp, rep.at(g)[k]);
    return m;
  };
  RMat out(sp, 4);
  for (const auto& [k, c] : r.terms()) {
    const Matrix x = as_matrix(k.first), y = as_matrix(k.second);
    out += (kron(x, y) - kron(y, x)).scaled(c);
  }
  return out;
}

RMat exp_wedge_rep(const WedgeTensor& r, const Rep2& rep) {
  const SpacePtr& sp = r.space();
  for (const auto& [k, c] : r.terms()) {
    if (c.min_weight() <= 0) {
      throw NonTruncatableError("exp of an r-matrix with a weight-zero coefficient");
    }
  }
  const RMat x = wedge_rep(r, rep);
  RMat term = Matrix::identity(sp, 4);
  RMat sum = term;
  for (int k = 1; !term.is_zero(); ++k) {
    term = (term * x).scaled(Series::constant(sp, Rational(1, k)));
    sum += term;
  }
  return sum;
}

RMat rmat_limit(const RMat& r, std::string_view param) {
  const SpacePtr target = r.space()->without(param);
  return r.map_entries(target, [&](const Series& x) { return rebase(slice_zero(x, param), target); });
}

std::vector<std::string> rmatrix_names() { return {"gl2.Iplus.standard", "gl2.II.nonstandard"}; }

namespace {

// Rows of the two printed matrices, given their building blocks.
RMat iplus_standard_matrix(const SpacePtr& sp, const Series& q, const Series& h) {
  const Series one = Series::constant(sp, 1), zero(sp);
  RMat r(sp, 4);
  const Series rows[4][4] = {{one, h, -(q * h), h * h},
                             {zero, q, one - q * q, q * h},
                             {zero, zero, q, -h},
                             {zero, zero, zero, one}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = rows[i][j];
  }
  return r;
}

RMat ii_nonstandard_matrix(const SpacePtr& sp, const Series& e_plus, const Series& e_minus,
                           const Series& p) {
  const Series one = Series::constant(sp, 1), zero(sp);
  RMat r(sp, 4);
  const Series rows[4][4] = {{one, -(e_minus * p), p, -(e_minus * p * p)},
                             {zero, e_minus, zero, e_minus * p},
                             {zero, zero, e_plus, -p},
                             {zero, zero, zero, one}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = rows[i][j];
  }
  return r;
}

void require_name(std::string_view name) {
  for (const auto& n : rmatrix_names()) {
    if (n == name) return;
  }
  throw LookupError("no printed R-matrix for '" + std::string(name) +
                    "'; valid names: gl2.Iplus.standard, gl2.II.nonstandard");
}

constexpr int kExactOrder = 16;
constexpr int kExactWindow = 16;

Symbol invertible(std::string name) {
  Symbol s;
  s.name = std::move(name);
  s.weight = 0;
  s.floor = -kExactWindow;
  s.cap = kExactWindow;
  return s;
}

}  // namespace

RMat printed_rmatrix(std::string_view name, int order) {
  require_name(name);
  const bool standard = name == "gl2.Iplus.standard";
  const char* x = standard ? "a" : "b";
  const char* x_plus = standard ? "a_plus" : "b_plus";
  const SpacePtr sp = ParamSpace::plain({x, x_plus}, order);
  const Series s = Series::symbol(sp, x);
  // (x_plus / 2) (e^x - 1) / x
  const Series h = Series::symbol(sp, x_plus, 1, Rational(1, 2)) *
                   analytic_series(Analytic::expm1_over_arg, s);
  if (standard) return iplus_standard_matrix(sp, analytic_series(Analytic::exp, s), h);
  return ii_nonstandard_matrix(sp, analytic_series(Analytic::exp, s),
                               analytic_series(Analytic::exp, -s), h);
}

RMat printed_rmatrix_exact(std::string_view name) {
  require_name(name);
  Symbol aux;
  if (name == "gl2.Iplus.standard") {
    aux.name = "h";
    const SpacePtr sp = ParamSpace::make({invertible("Q"), aux}, kExactOrder);
    return iplus_standard_matrix(sp, Series::symbol(sp, "Q"), Series::symbol(sp, "h"));
  }
  aux.name = "p";
  const SpacePtr sp = ParamSpace::make({invertible("B"), aux}, kExactOrder);
  return ii_nonstandard_matrix(sp, Series::symbol(sp, "B"), Series::symbol(sp, "B", -1),
                               Series::symbol(sp, "p"));
}

}  // namespace hopfc
