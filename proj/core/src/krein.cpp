#include "pencilkit/krein.hpp"

#include <cmath>

#include "pencilkit/errors.hpp"

namespace pencilkit {

KreinStructure::KreinStructure(const SymMatrix& gram, double tol_zero)
    : gram_(gram), parts_(abs_sqrt_sign(gram, tol_zero)) {}

double krein_inner(const KreinStructure& k, const Vector& x, const Vector& y) {
  if (x.size() != k.dim() || y.size() != k.dim())
    throw DimensionMismatch("krein_inner: vector length differs from the space dimension");
  return x.dot(k.gram().matrix() * y);
}

ConeType cone_type(const KreinStructure& k, const Vector& x, double tol_type) {
  const double nx2 = x.squaredNorm();
  if (nx2 == 0.0) throw ZeroVector("cone_type: zero vector has no cone");
  const double q = krein_inner(k, x, x);
  const double thr = tol_type * k.gram().norm() * nx2;
  if (q > thr) return ConeType::positive;
  if (q < -thr) return ConeType::negative;
  return ConeType::neutral;
}

int negative_squares(const SymMatrix& form_gram, double tol_zero) {
  return inertia(form_gram, tol_zero).n_minus;
}

Subspace krein_ortho_complement(const KreinStructure& k, const Subspace& f, double tol_rank) {
  if (f.ambient_dim() != k.dim())
    throw DimensionMismatch("krein_ortho_complement: subspace lives in another space");
  if (f.rank() == 0) return Subspace::full(k.dim());
  const Matrix constraints = (k.gram().matrix() * f.basis()).transpose();
  // The rank test is relative to ‖G‖, not to the (possibly tiny) compressed rows.
  Eigen::BDCSVD<Matrix> svd(constraints, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thr = tol_rank * std::max(k.gram().norm(), 1e-300);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > thr) ++r;
  const Matrix basis = svd.matrixV().rightCols(k.dim() - r);
  return Subspace(k.dim(), basis, 1e-10);
}

Subspace isotropic_part(const KreinStructure& k, const Subspace& f, double tol_rank) {
  const Subspace perp = krein_ortho_complement(k, f, tol_rank);
  return Subspace(k.dim(), intersect(f.basis(), perp.basis(), tol_rank), 1e-10);
}

bool is_ortho_complemented(const KreinStructure& k, const Subspace& f, double tol_rank) {
  const Subspace perp = krein_ortho_complement(k, f, tol_rank);
  if (f.rank() + perp.rank() != k.dim()) return false;
  Matrix stacked(k.dim(), f.rank() + perp.rank());
  stacked << f.basis(), perp.basis();
  return numerical_rank(stacked, tol_rank) == k.dim();
}

QuotientSpace quotient_by_kernel(const SymMatrix& b, double tol_zero) {
  const AbsSqrtSign parts = abs_sqrt_sign(b, tol_zero);
  const int n = b.dim();
  Matrix c;
  if (parts.kernel.rank() == 0) {
    c = Matrix::Identity(n, n);
  } else {
    if (parts.kernel.rank() == n) throw InvalidArgument("quotient_by_kernel: B vanishes");
    const Matrix proj = Matrix::Identity(n, n) - parts.kernel.projector();
    c = orthonormalize(proj, 1e-8).basis();
    if (c.cols() != n - parts.kernel.rank())
      throw NonConvergence("quotient_by_kernel: complement rank mismatch", 0.0);
  }
  return QuotientSpace{n, parts.kernel, c, c * c.transpose(),
                       SymMatrix(c.transpose() * b.matrix() * c)};
}

}  // namespace pencilkit
