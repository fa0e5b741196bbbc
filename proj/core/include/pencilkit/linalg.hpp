#pragma once

// Dense kernels shared by every module: symmetric eigendecomposition, inertia,
// the matrix functions |B|^{1/2}, |B|^{-1/2} and sign(B), and orthonormal
// subspace handling.

#include <complex>

#include <Eigen/Dense>

#include "pencilkit/tolerances.hpp"

namespace pencilkit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Real symmetric matrix. The input is symmetrized as (M + Mᵀ)/2 on
/// construction; the Frobenius norm of the removed skew part is kept.
class SymMatrix {
 public:
  explicit SymMatrix(const Matrix& m);

  static SymMatrix identity(int n);
  static SymMatrix zero(int n);
  static SymMatrix diagonal(const Vector& d);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double asymmetry() const noexcept { return asymmetry_; }
  /// Spectral norm, max |λ_k|.
  double norm() const noexcept { return norm_; }

 private:
  Matrix m_;
  double asymmetry_ = 0.0;
  double norm_ = 0.0;
};

struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  int dim() const noexcept { return n_plus + n_zero + n_minus; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Span of orthonormal (Euclidean) columns in R^ambient_dim. Rank 0 is legal.
class Subspace {
 public:
  /// Throws InvalidArgument if the columns are not orthonormal to tol_ortho.
  Subspace(int ambient_dim, Matrix basis, double tol_ortho = kDefaultTolerances.ortho);

  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);

  int ambient_dim() const noexcept { return ambient_; }
  int rank() const noexcept { return static_cast<int>(basis_.cols()); }
  const Matrix& basis() const noexcept { return basis_; }
  Matrix projector() const { return basis_ * basis_.transpose(); }
  /// Euclidean distance of v from the subspace relative to ‖v‖.
  double relative_distance(const Vector& v) const;

 private:
  int ambient_;
  Matrix basis_;
};

struct SymEig {
  Vector values;   // ascending
  Matrix vectors;  // orthonormal columns
};

SymEig sym_eig(const SymMatrix& m);

Inertia inertia(const SymMatrix& m, double tol_zero = kDefaultTolerances.zero);

struct AbsSqrtSign {
  SymMatrix abs_sqrt;
  SymMatrix abs_sqrt_inv_on_range;
  SymMatrix J;
  Subspace kernel;
};

AbsSqrtSign abs_sqrt_sign(const SymMatrix& b, double tol_zero = kDefaultTolerances.zero);

/// Modified Gram-Schmidt with one reorthogonalization pass. Columns whose
/// residual falls below tol_rank times the largest input column norm are dropped.
Subspace orthonormalize(const Matrix& vectors, double tol_rank = kDefaultTolerances.rank);

// Complex counterpart of orthonormalize, used for eigenvectors of complex
// eigenvalues.
CMatrix orthonormalize_complex(const CMatrix& vectors,
                               double tol_rank = kDefaultTolerances.rank);

/// Orthonormal basis of {x : M x = 0}; singular values ≤ tol_rank·σ_max count
/// as zero. A zero matrix has the whole space as its null space.
Matrix null_space(const Matrix& m, double tol_rank = kDefaultTolerances.rank);
CMatrix null_space(const CMatrix& m, double tol_rank = kDefaultTolerances.rank);

/// Numerical rank with the same relative convention as null_space.
int numerical_rank(const Matrix& m, double tol_rank = kDefaultTolerances.rank);

double smallest_singular_value(const CMatrix& m);
double spectral_norm(const Matrix& m);
double spectral_norm(const CMatrix& m);

/// Sine of the largest principal angle between the column spans of two
/// orthonormal bases. Returns 1 when the dimensions differ.
double subspace_gap(const CMatrix& u, const CMatrix& v);
double subspace_gap(const Matrix& u, const Matrix& v);

/// Orthonormal basis of span(u) ∩ span(v) for orthonormal u, v.
Matrix intersect(const Matrix& u, const Matrix& v, double tol_rank = kDefaultTolerances.rank);

}  // namespace pencilkit
