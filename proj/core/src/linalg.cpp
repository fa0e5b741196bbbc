#include "pencilkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pencilkit/errors.hpp"

namespace pencilkit {

namespace {

double max_abs(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

template <typename Mat>
Mat null_space_impl(const Mat& m, double tol_rank) {
  const auto cols = m.cols();
  if (m.rows() == 0) return Mat::Identity(cols, cols);
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  if (smax == 0.0) return Mat::Identity(cols, cols);
  Eigen::Index r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > tol_rank * smax) ++r;
  return svd.matrixV().rightCols(cols - r);
}

}  // namespace

SymMatrix::SymMatrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("SymMatrix: matrix is not square");
  if (m.rows() < 1) throw InvalidArgument("SymMatrix: dimension must be at least 1");
  if (!m.allFinite()) throw InvalidArgument("SymMatrix: non-finite entry");
  m_ = 0.5 * (m + m.transpose());
  asymmetry_ = 0.5 * (m - m.transpose()).norm();
  // Exact symmetry after the average: copy the upper triangle to the lower one.
  for (Eigen::Index j = 0; j < m_.cols(); ++j)
    for (Eigen::Index i = j + 1; i < m_.rows(); ++i) m_(i, j) = m_(j, i);
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  norm_ = max_abs(es.eigenvalues());
}

SymMatrix SymMatrix::identity(int n) { return SymMatrix(Matrix::Identity(n, n)); }
SymMatrix SymMatrix::zero(int n) { return SymMatrix(Matrix::Zero(n, n)); }
SymMatrix SymMatrix::diagonal(const Vector& d) { return SymMatrix(Matrix(d.asDiagonal())); }

Subspace::Subspace(int ambient_dim, Matrix basis, double tol_ortho)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
  if (ambient_dim < 1) throw InvalidArgument("Subspace: ambient dimension must be positive");
  if (basis_.cols() == 0) {
    basis_.resize(ambient_dim, 0);
    return;
  }
  if (basis_.rows() != ambient_dim)
    throw DimensionMismatch("Subspace: basis rows differ from ambient dimension");
  if (basis_.cols() > ambient_dim) throw InvalidArgument("Subspace: rank exceeds ambient dimension");
  const Matrix gram = basis_.transpose() * basis_;
  const double err = (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (err > std::max(tol_ortho, 1e-12))
    throw InvalidArgument("Subspace: basis not orthonormal (deviation " + std::to_string(err) + ")");
}

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, Matrix(ambient_dim, 0)); }

Subspace Subspace::full(int ambient_dim) {
  return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim));
}

double Subspace::relative_distance(const Vector& v) const {
  const double nv = v.norm();
  if (nv == 0.0) return 0.0;
  const Vector r = v - basis_ * (basis_.transpose() * v);
  return r.norm() / nv;
}

SymEig sym_eig(const SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.matrix());
  if (es.info() != Eigen::Success) {
    const double res = m.norm();
    throw NonConvergence("sym_eig: symmetric QR did not converge", res);
  }
  SymEig out{es.eigenvalues(), es.eigenvectors()};
  const double res = (m.matrix() * out.vectors - out.vectors * out.values.asDiagonal()).norm();
  if (res > 1e-8 * std::max(1.0, m.norm()) * m.dim())
    throw NonConvergence("sym_eig: eigen-residual too large", res);
  return out;
}

Inertia inertia(const SymMatrix& m, double tol_zero) {
  if (tol_zero < 0) throw InvalidArgument("inertia: negative tolerance");
  const SymEig e = sym_eig(m);
  const double thr = tol_zero * m.norm();
  Inertia in;
  for (Eigen::Index k = 0; k < e.values.size(); ++k) {
    const double l = e.values(k);
    if (l > thr)
      ++in.n_plus;
    else if (l < -thr)
      ++in.n_minus;
    else
      ++in.n_zero;
  }
  return in;
}

AbsSqrtSign abs_sqrt_sign(const SymMatrix& b, double tol_zero) {
  const SymEig e = sym_eig(b);
  const int n = b.dim();
  const double thr = tol_zero * b.norm();
  Vector sq(n), sq_inv(n), sg(n);
  std::vector<int> ker;
  for (int k = 0; k < n; ++k) {
    const double l = e.values(k);
    sq(k) = std::sqrt(std::abs(l));
    if (std::abs(l) > thr) {
      sq_inv(k) = 1.0 / sq(k);
      sg(k) = l > 0 ? 1.0 : -1.0;
    } else {
      sq_inv(k) = 0.0;
      sg(k) = 0.0;
      ker.push_back(k);
    }
  }
  const Matrix& v = e.vectors;
  Matrix kb(n, static_cast<Eigen::Index>(ker.size()));
  for (std::size_t c = 0; c < ker.size(); ++c) kb.col(static_cast<Eigen::Index>(c)) = v.col(ker[c]);
  return AbsSqrtSign{
      SymMatrix(v * sq.asDiagonal() * v.transpose()),
      SymMatrix(v * sq_inv.asDiagonal() * v.transpose()),
      SymMatrix(v * sg.asDiagonal() * v.transpose()),
      Subspace(n, kb, 1e-10),
  };
}

Subspace orthonormalize(const Matrix& vectors, double tol_rank) {
  const auto n = vectors.rows();
  if (n < 1) throw InvalidArgument("orthonormalize: empty ambient dimension");
  double cmax = 0.0;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) cmax = std::max(cmax, vectors.col(j).norm());
  Matrix q(n, 0);
  if (cmax == 0.0) return Subspace(static_cast<int>(n), q);
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Vector w = vectors.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < q.cols(); ++i) w -= q.col(i).dot(w) * q.col(i);
    const double nw = w.norm();
    if (nw <= tol_rank * cmax || q.cols() == n) continue;
    q.conservativeResize(n, q.cols() + 1);
    q.col(q.cols() - 1) = w / nw;
  }
  return Subspace(static_cast<int>(n), q, 1e-10);
}

CMatrix orthonormalize_complex(const CMatrix& vectors, double tol_rank) {
  const auto n = vectors.rows();
  double cmax = 0.0;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) cmax = std::max(cmax, vectors.col(j).norm());
  CMatrix q(n, 0);
  if (cmax == 0.0) return q;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    CVector w = vectors.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < q.cols(); ++i) w -= q.col(i).dot(w) * q.col(i);
    const double nw = w.norm();
    if (nw <= tol_rank * cmax || q.cols() == n) continue;
    q.conservativeResize(n, q.cols() + 1);
    q.col(q.cols() - 1) = w / nw;
  }
  return q;
}

Matrix null_space(const Matrix& m, double tol_rank) { return null_space_impl(m, tol_rank); }
CMatrix null_space(const CMatrix& m, double tol_rank) { return null_space_impl(m, tol_rank); }

int numerical_rank(const Matrix& m, double tol_rank) {
  if (m.size() == 0) return 0;
  return static_cast<int>(m.cols() - null_space(m, tol_rank).cols());
}

double smallest_singular_value(const CMatrix& m) {
  Eigen::BDCSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  // A wide matrix always has a nontrivial kernel.
  if (m.cols() > m.rows()) return 0.0;
  return s(s.size() - 1);
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double subspace_gap(const CMatrix& u, const CMatrix& v) {
  if (u.cols() != v.cols()) return 1.0;
  if (u.cols() == 0) return 0.0;
  const CMatrix r = v - u * (u.adjoint() * v);
  return std::min(1.0, spectral_norm(r));
}

double subspace_gap(const Matrix& u, const Matrix& v) {
  return subspace_gap(CMatrix(u.cast<Complex>()), CMatrix(v.cast<Complex>()));
}

Matrix intersect(const Matrix& u, const Matrix& v, double tol_rank) {
  const auto n = u.rows();
  if (u.cols() == 0 || v.cols() == 0) return Matrix(n, 0);
  Matrix stacked(n, u.cols() + v.cols());
  stacked << u, -v;
  const Matrix coeffs = null_space(stacked, tol_rank);
  if (coeffs.cols() == 0) return Matrix(n, 0);
  return orthonormalize(u * coeffs.topRows(u.cols()), tol_rank).basis();
}

}  // namespace pencilkit
