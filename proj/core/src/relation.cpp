#include "pencilkit/relation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

#include "pencilkit/errors.hpp"

namespace pencilkit {

namespace {

// Null space with an absolute singular-value threshold. Graph bases are
// orthonormal, so their blocks have natural scale 1.
template <typename Mat>
Mat null_space_abs(const Mat& m, double thr) {
  const auto cols = m.cols();
  if (m.rows() == 0) return Mat::Identity(cols, cols);
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > thr) ++r;
  return svd.matrixV().rightCols(cols - r);
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

double smallest_sv_rect(const CMatrix& m) {
  if (m.cols() == 0) return std::numeric_limits<double>::infinity();
  if (m.cols() > m.rows()) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace

LinearRelation::LinearRelation(int ambient_dim, Subspace graph, SymMatrix gram)
    : n_(ambient_dim), graph_(std::move(graph)), gram_(std::move(gram)) {
  if (graph_.ambient_dim() != 2 * n_) throw DimensionMismatch("LinearRelation: graph must live in H × H");
  if (gram_.dim() != n_) throw DimensionMismatch("LinearRelation: gram dimension mismatch");
}

LinearRelation LinearRelation::from_pairs(const Matrix& pairs, const SymMatrix& gram, double tol_rank) {
  const int n = gram.dim();
  if (pairs.rows() != 2 * n) throw DimensionMismatch("LinearRelation::from_pairs: expected 2n rows");
  if (pairs.cols() == 0) return LinearRelation(n, Subspace::zero(2 * n), gram);
  return LinearRelation(n, orthonormalize(pairs, tol_rank), gram);
}

LinearRelation LinearRelation::graph_of(const Matrix& op, const SymMatrix& gram) {
  const int n = gram.dim();
  if (op.rows() != n || op.cols() != n) throw DimensionMismatch("LinearRelation::graph_of: shape");
  return from_pairs(stack(Matrix::Identity(n, n), op), gram);
}

LinearRelation LinearRelation::identity(const SymMatrix& gram) {
  return graph_of(Matrix::Identity(gram.dim(), gram.dim()), gram);
}

LinearRelation LinearRelation::purely_multivalued(const Matrix& f, const SymMatrix& gram) {
  return from_pairs(stack(Matrix::Zero(gram.dim(), f.cols()), f), gram);
}

LinearRelation LinearRelation::full(const SymMatrix& gram) {
  const int n = gram.dim();
  return LinearRelation(n, Subspace::full(2 * n), gram);
}

Subspace LinearRelation::domain() const {
  if (dim() == 0) return Subspace::zero(n_);
  return orthonormalize(domain_part(), 1e-10);
}

double graph_distance(const LinearRelation& a, const LinearRelation& b) {
  if (a.ambient_dim() != b.ambient_dim()) return 1.0;
  if (a.dim() != b.dim()) return 1.0;
  if (a.dim() == 0) return 0.0;
  return spectral_norm(Matrix(a.graph().projector() - b.graph().projector()));
}

LinearRelation relation_from_pencil(const SymmetricPencil& p, const Tolerances& tol) {
  const int n = p.dim();
  Matrix map(n, 2 * n);
  map << p.A().matrix(), -p.B().matrix();
  const double thr = tol.rank * std::max(p.A().norm(), p.B().norm());
  const Matrix basis = null_space_abs(map, thr);
  return LinearRelation(n, Subspace(2 * n, basis, 1e-10), p.B());
}

MultivaluedPart multivalued_part(const LinearRelation& t, const Tolerances& tol) {
  const int n = t.ambient_dim();
  if (t.dim() == 0) return {Subspace::zero(2 * n), Subspace::zero(n)};
  const Matrix coeffs = null_space_abs(t.domain_part(), tol.rank);
  if (coeffs.cols() == 0) return {Subspace::zero(2 * n), Subspace::zero(n)};
  const Matrix pairs = t.graph().basis() * coeffs;
  return {Subspace(2 * n, pairs, 1e-10), orthonormalize(t.range_part() * coeffs, tol.rank)};
}

LinearRelation relation_adjoint(const LinearRelation& t, const Tolerances& tol) {
  const int n = t.ambient_dim();
  if (t.dim() == 0) return LinearRelation::full(t.gram());
  const Matrix& g = t.gram().matrix();
  Matrix constraints(t.dim(), 2 * n);
  constraints << -(t.range_part().transpose() * g), t.domain_part().transpose() * g;
  const double thr = tol.rank * std::max(t.gram().norm(), 1e-300);
  return LinearRelation(n, Subspace(2 * n, null_space_abs(constraints, thr), 1e-10), t.gram());
}

std::vector<Complex> RelationSpectrum::values() const {
  std::vector<Complex> out;
  for (const auto& e : eigen) out.push_back(e.value);
  return out;
}

RelationSpectrum relation_eigenvalues(const LinearRelation& t, const Tolerances& tol) {
  RelationSpectrum out;
  const int n = t.ambient_dim();
  const int d = t.dim();
  if (d == 0) return out;
  const Matrix gx = t.domain_part();
  const Matrix gy = t.range_part();
  if (d > n) {
    out.all_lambda = true;
    return out;
  }
  // Normal rank below d: (x, λx) ∈ T for every λ.
  auto pencil_at = [&](Complex l) -> CMatrix { return gy.cast<Complex>() - l * gx.cast<Complex>(); };
  const Complex probe1(0.6180339887, 0.4142135624), probe2(-1.3247179572, 0.7071067812);
  if (smallest_sv_rect(pencil_at(probe1)) <= tol.rank * (1 + std::abs(probe1)) &&
      smallest_sv_rect(pencil_at(probe2)) <= tol.rank * (1 + std::abs(probe2))) {
    out.all_lambda = true;
    return out;
  }

  Matrix w = Matrix::Identity(n, n);
  if (d < n) {
    // Square the rectangular pencil with a fixed generic projection; spurious
    // roots are filtered below.
    std::mt19937_64 rng(0x5eed1234abcdULL);
    std::normal_distribution<double> nd;
    Matrix r(n, d);
    for (Eigen::Index i = 0; i < r.size(); ++i) r.data()[i] = nd(rng);
    w = Eigen::HouseholderQR<Matrix>(r).householderQ() * Matrix::Identity(n, d);
  }
  const Matrix sy = w.transpose() * gy;
  const Matrix sx = w.transpose() * gx;
  Eigen::GeneralizedEigenSolver<Matrix> ges(sy, sx, false);
  if (ges.info() != Eigen::Success)
    throw NonConvergence("relation_eigenvalues: QZ iteration failed", 0.0);
  std::vector<Complex> candidates;
  for (Eigen::Index i = 0; i < ges.alphas().size(); ++i) {
    const Complex alpha = ges.alphas()(i);
    const double beta = ges.betas()(i);
    if (std::abs(beta) <= 1e-12 * std::max(std::abs(alpha), std::abs(beta))) continue;
    const Complex l = alpha / beta;
    if (d < n && smallest_sv_rect(pencil_at(l)) > tol.eig * (1 + std::abs(l))) continue;
    candidates.push_back(l);
  }
  const double escale = eigenvalue_scale(candidates);
  for (auto [value, count] : cluster_eigenvalues(candidates, tol.cluster)) {
    if (std::abs(value.imag()) <= tol.imag * escale) value = Complex(value.real(), 0.0);
    const CMatrix coeffs = null_space_abs(pencil_at(value), tol.eig * (1 + std::abs(value)));
    CMatrix vecs = coeffs.cols() > 0 ? orthonormalize_complex(gx.cast<Complex>() * coeffs, tol.rank)
                                     : CMatrix(n, 0);
    if (vecs.cols() == 0) {
      Eigen::BDCSVD<CMatrix> svd(pencil_at(value), Eigen::ComputeFullV);
      vecs = orthonormalize_complex(gx.cast<Complex>() * svd.matrixV().rightCols(1), 0.0);
    }
    const int mult = d == n ? count : std::max<int>(count, static_cast<int>(vecs.cols()));
    out.eigen.push_back(RelationEigen{value, mult, vecs});
  }
  std::sort(out.eigen.begin(), out.eigen.end(), [](const RelationEigen& a, const RelationEigen& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

OperatorPart operator_part(const LinearRelation& t, const Tolerances& tol, double selfadjoint_tol) {
  const int n = t.ambient_dim();
  const KreinStructure k(t.gram(), tol.zero);
  const MultivaluedPart mv = multivalued_part(t, tol);
  const Subspace& t0 = mv.values;
  if (!is_ortho_complemented(k, t0, tol.rank)) {
    throw NotOrthoComplemented("operator_part: T(0) is degenerate in the Krein form",
                               isotropic_part(k, t0, tol.rank).basis());
  }
  const Subspace space = krein_ortho_complement(k, t0, tol.rank);

  Matrix ts_pairs = t.graph().basis();
  if (t0.rank() > 0 && t.dim() > 0) {
    const Matrix constraint = t0.basis().transpose() * t.gram().matrix() * t.range_part();
    const Matrix coeffs = null_space_abs(constraint, tol.rank * std::max(t.gram().norm(), 1e-300));
    ts_pairs = t.graph().basis() * coeffs;
  }
  LinearRelation ts = ts_pairs.cols() > 0 ? LinearRelation(n, Subspace(2 * n, ts_pairs, 1e-10), t.gram())
                                          : LinearRelation(n, Subspace::zero(2 * n), t.gram());

  OperatorPart out{ts, space, std::nullopt};
  out.is_operator = multivalued_part(ts, tol).values.rank() == 0;
  const Subspace dom_t = t.domain();
  const Subspace dom_s = ts.domain();
  out.domain_matches = dom_t.rank() == dom_s.rank() && subspace_gap(dom_t.basis(), dom_s.basis()) <= 1e-8;
  out.range_in_space = true;
  const Matrix ry = ts.range_part();
  for (Eigen::Index c = 0; c < ry.cols(); ++c)
    if (ry.col(c).norm() > 1e-14 && space.relative_distance(ry.col(c)) > 1e-8) out.range_in_space = false;

  out.t_adjoint_distance = graph_distance(relation_adjoint(t, tol), t);
  out.t_selfadjoint = out.t_adjoint_distance <= selfadjoint_tol;

  const Matrix& c = space.basis();
  const int m = space.rank();
  if (m == 0) {
    out.ts_adjoint_distance = 0.0;
    out.ts_selfadjoint = true;
  } else {
    const SymMatrix gram_c(c.transpose() * t.gram().matrix() * c);
    const Matrix x = c.transpose() * ts.domain_part();
    const Matrix y = c.transpose() * ts.range_part();
    const LinearRelation ts_c = ts.dim() > 0 ? LinearRelation::from_pairs(stack(x, y), gram_c, 1e-10)
                                             : LinearRelation(m, Subspace::zero(2 * m), gram_c);
    out.ts_adjoint_distance = graph_distance(relation_adjoint(ts_c, tol), ts_c);
    out.ts_selfadjoint = out.ts_adjoint_distance <= selfadjoint_tol;
    if (ts.dim() == m && numerical_rank(x, 1e-10) == m) {
      const Matrix mat = y * x.inverse();
      out.op = ReducedOperator{mat, KreinStructure(gram_c, tol.zero), c.transpose(), c,
                               ConstructionTag::relation_part};
    }
  }
  out.selfadjoint_equivalence = out.t_selfadjoint == out.ts_selfadjoint;

  const RelationSpectrum st = relation_eigenvalues(t, tol);
  const RelationSpectrum ss = relation_eigenvalues(ts, tol);
  if (st.all_lambda || ss.all_lambda) {
    out.spectrum_distance = st.all_lambda == ss.all_lambda ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    const auto a = st.values();
    const auto b = ss.values();
    std::vector<Complex> both = a;
    both.insert(both.end(), b.begin(), b.end());
    out.spectrum_distance = hausdorff_distance(a, b) / eigenvalue_scale(both);
  }
  out.point_spectra_match = out.spectrum_distance <= 1e-8;
  return out;
}

LinearRelation stilde_quotient(const SymmetricPencil& p, const Tolerances& tol) {
  if (inertia(p.A(), tol.zero).n_zero > 0) throw SingularA("stilde_quotient: A must be nonsingular");
  const QuotientSpace q = quotient_by_kernel(p.B(), tol.zero);
  const Matrix& c = q.complement_basis;
  const Matrix rt = c.transpose() * p.A().matrix().partialPivLu().solve(p.B().matrix() * c);
  return LinearRelation::from_pairs(stack(rt, Matrix::Identity(q.dim(), q.dim())), q.reduced_gram);
}

OrthoConditions orthocomplemented_conditions(const SymmetricPencil& p, const Tolerances& tol) {
  const AbsSqrtSign parts = abs_sqrt_sign(p.B(), tol.zero);
  const Subspace& ker = parts.kernel;
  if (ker.rank() == 0) return {true, true};
  const Matrix ak = p.A().matrix() * ker.basis();
  OrthoConditions out;
  const Matrix outside = ak - ker.projector() * ak;
  out.cond_invariant = outside.norm() <= 1e-9 * std::max(1.0, p.A().norm());
  const int n = p.dim();
  const Subspace image = orthonormalize(ak, tol.rank);
  const Matrix range_b = orthonormalize(Matrix::Identity(n, n) - ker.projector(), 1e-8).basis();
  out.cond_range = intersect(range_b, image.basis(), 1e-8).cols() == 0;
  return out;
}

}  // namespace pencilkit
