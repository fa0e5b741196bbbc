#include "pencilkit/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "pencilkit/discretize.hpp"
#include "pencilkit/errors.hpp"

namespace pencilkit {

namespace {

AbsSqrtSign nonsingular_parts(const SymMatrix& b, const Tolerances& tol) {
  AbsSqrtSign parts = abs_sqrt_sign(b, tol.zero);
  if (parts.kernel.rank() > 0)
    throw SingularB("B has a nontrivial kernel; use the linear-relation path");
  return parts;
}

ReducedOperator make_operator(Matrix s, const AbsSqrtSign& parts, ConstructionTag tag,
                              const Tolerances& tol) {
  return ReducedOperator{std::move(s), KreinStructure(parts.J, tol.zero), parts.abs_sqrt.matrix(),
                         parts.abs_sqrt_inv_on_range.matrix(), tag};
}

// Orthonormal basis of the (numerical) kernel of m, at most `cap` columns and
// at least one.
CMatrix eigenspace(const CMatrix& m, double tol, int cap) {
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  int k = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) <= tol * smax) ++k;
  k = std::clamp(k, 1, std::max(1, cap));
  return svd.matrixV().rightCols(k);
}

std::vector<int> sorted_lengths(const std::vector<JordanChain>& chains) {
  std::vector<int> out;
  for (const auto& c : chains) out.push_back(c.length());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view to_string(ConstructionTag t) {
  switch (t) {
    case ConstructionTag::direct:
      return "direct";
    case ConstructionTag::inverse_compression:
      return "inverse_compression";
    case ConstructionTag::relation_part:
      return "relation_part";
  }
  return "unknown";
}

double ReducedOperator::krein_symmetry_residual() const {
  const Matrix gm = krein.gram().matrix() * matrix;
  return (gm - gm.transpose()).norm() / std::max(1.0, gm.norm());
}

ReducedOperator reduce_direct(const SymmetricPencil& p, const Tolerances& tol) {
  const AbsSqrtSign parts = nonsingular_parts(p.B(), tol);
  const Matrix& w = parts.abs_sqrt_inv_on_range.matrix();
  Matrix form = w * p.A().matrix() * w;
  form = 0.5 * (form + form.transpose());
  return make_operator(parts.J.matrix() * form, parts, ConstructionTag::direct, tol);
}

ReducedOperator reduce_via_inverse(const SymmetricPencil& p, const Tolerances& tol) {
  const AbsSqrtSign parts = nonsingular_parts(p.B(), tol);
  const Inertia ia = inertia(p.A(), tol.zero);
  if (ia.n_zero > 0) throw SingularA("A is singular; the bounded inverse A^{-1}B does not exist");
  const Matrix& root = parts.abs_sqrt.matrix();
  Eigen::PartialPivLU<Matrix> lu_a(p.A().matrix());
  // R = |B|^{1/2} A^{-1} |B|^{1/2} J, a bounded operator selfadjoint in [·,·]_J.
  const Matrix r = root * lu_a.solve(root) * parts.J.matrix();
  Eigen::PartialPivLU<Matrix> lu_r(r);
  return make_operator(lu_r.inverse(), parts, ConstructionTag::inverse_compression, tol);
}

double reduction_agreement(const ReducedOperator& direct, const ReducedOperator& via_inverse) {
  if (direct.matrix.rows() != via_inverse.matrix.rows())
    throw DimensionMismatch("reduction_agreement: operators act on different spaces");
  return spectral_norm(Matrix(direct.matrix - via_inverse.matrix)) /
         std::max(1.0, spectral_norm(direct.matrix));
}

JordanChain to_reduced(const ReducedOperator& s, const JordanChain& chain) {
  JordanChain out{chain.eigenvalue, {}};
  const CMatrix t = s.coordinate_map.cast<Complex>();
  for (const auto& x : chain.vectors) out.vectors.push_back(t * x);
  return out;
}

JordanChain from_reduced(const ReducedOperator& s, const JordanChain& chain) {
  JordanChain out{chain.eigenvalue, {}};
  const CMatrix t = s.inverse_coordinate_map.cast<Complex>();
  for (const auto& x : chain.vectors) out.vectors.push_back(t * x);
  return out;
}

double reduced_chain_residual(const ReducedOperator& s, const JordanChain& chain) {
  const auto n = s.matrix.rows();
  const CMatrix l = s.matrix.cast<Complex>() - chain.eigenvalue * CMatrix::Identity(n, n);
  double xmax = 0.0;
  for (const auto& x : chain.vectors) xmax = std::max(xmax, x.norm());
  if (xmax == 0.0) return std::numeric_limits<double>::infinity();
  double r = 0.0;
  for (std::size_t i = 0; i < chain.vectors.size(); ++i) {
    CVector e = l * chain.vectors[i];
    if (i > 0) e -= chain.vectors[i - 1];
    r = std::max(r, e.norm());
  }
  const double scale = std::max(1.0, spectral_norm(s.matrix) + std::abs(chain.eigenvalue));
  return r / (scale * xmax);
}

std::vector<JordanChain> reduced_jordan_chains(const ReducedOperator& s, Complex lambda,
                                               const Tolerances& tol, int max_multiplicity) {
  const auto n = s.matrix.rows();
  const CMatrix l0 = s.matrix.cast<Complex>() - lambda * CMatrix::Identity(n, n);
  const double scale = std::max(1e-300, spectral_norm(s.matrix) + std::abs(lambda));
  const double margin = smallest_singular_value(l0) / scale;
  if (margin > tol.eig)
    throw NotAnEigenvalue("reduced_jordan_chains: λ is not an eigenvalue of S", margin);
  auto chains = jordan_chains_general(l0, CMatrix::Identity(n, n), lambda, std::max(tol.chain, tol.eig),
                                      max_multiplicity);
  if (chains.empty()) chains.push_back(JordanChain{lambda, {eigenspace(l0, 0.0, 1).col(0)}});
  return chains;
}

CorrespondenceReport spectral_correspondence_report(const SymmetricPencil& p, const Tolerances& tol,
                                                    const CorrespondenceThresholds& thr) {
  const ReducedOperator s = reduce_direct(p, tol);
  CorrespondenceReport rep;
  rep.krein_symmetry = s.krein_symmetry_residual();

  const PencilSpectrum pencil = pencil_eigenvalues_qz(p, tol);
  rep.pencil_values = pencil.multiset();
  Eigen::EigenSolver<Matrix> es(s.matrix, false);
  if (es.info() != Eigen::Success)
    throw NonConvergence("spectral_correspondence_report: eigensolver failed", 0.0);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) rep.reduced_values.push_back(es.eigenvalues()(i));

  std::vector<Complex> all = rep.pencil_values;
  all.insert(all.end(), rep.reduced_values.begin(), rep.reduced_values.end());
  rep.scale = eigenvalue_scale(all);
  rep.counts_match = rep.pencil_values.size() == rep.reduced_values.size() && pencil.infinite_count == 0;
  rep.hausdorff = hausdorff_distance(rep.pencil_values, rep.reduced_values);

  const auto n = s.matrix.rows();
  const CMatrix s_c = s.matrix.cast<Complex>();
  const CMatrix back = s.inverse_coordinate_map.cast<Complex>();
  bool structure_ok = true;
  for (const auto& item : pencil.items) {
    // Eigenspace of S at the same value, mapped to original coordinates.
    const CMatrix ker_s = eigenspace(s_c - item.value * CMatrix::Identity(n, n), tol.eig,
                                     item.algebraic_multiplicity);
    const CMatrix mapped = orthonormalize_complex(back * ker_s, tol.rank);
    EigenspaceComparison cmp{item.value, static_cast<int>(item.eigenvectors.cols()),
                             static_cast<int>(mapped.cols()), subspace_gap(item.eigenvectors, mapped)};
    rep.max_angle = std::max(rep.max_angle, std::asin(std::min(1.0, cmp.gap)));
    rep.eigenspaces.push_back(cmp);

    std::vector<JordanChain> forward, backward;
    try {
      forward = jordan_chains(p, item.value, tol, item.algebraic_multiplicity);
      backward = reduced_jordan_chains(s, item.value, tol, item.algebraic_multiplicity);
    } catch (const NotAnEigenvalue&) {
      structure_ok = false;
      rep.max_chain_residual = std::numeric_limits<double>::infinity();
      continue;
    }
    if (sorted_lengths(forward) != sorted_lengths(backward)) structure_ok = false;
    for (const auto& c : forward) {
      const JordanChain hat = to_reduced(s, c);
      const JordanChain again = from_reduced(s, hat);
      double rt = 0.0, xmax = 0.0;
      for (std::size_t i = 0; i < c.vectors.size(); ++i) {
        rt = std::max(rt, (again.vectors[i] - c.vectors[i]).norm());
        xmax = std::max(xmax, c.vectors[i].norm());
      }
      ChainComparison cc{item.value, c.length(), true, reduced_chain_residual(s, hat), rt / xmax};
      rep.max_chain_residual = std::max({rep.max_chain_residual, cc.residual, cc.roundtrip});
      rep.chains.push_back(cc);
    }
    for (const auto& c : backward) {
      ChainComparison cc{item.value, c.length(), false, chain_residual(p, from_reduced(s, c)), 0.0};
      rep.max_chain_residual = std::max(rep.max_chain_residual, cc.residual);
      rep.chains.push_back(cc);
    }
  }
  rep.pass = rep.counts_match && structure_ok && rep.hausdorff <= thr.hausdorff * rep.scale &&
             rep.max_angle <= thr.angle && rep.max_chain_residual <= thr.chain &&
             rep.krein_symmetry <= 1e-9;
  return rep;
}

NegativeSquaresMatch negative_squares_match(const SymmetricPencil& p, const Tolerances& tol) {
  const ReducedOperator s = reduce_direct(p, tol);
  // J·S = |B|^{-1/2} A |B|^{-1/2}, the matrix of [Sx, y].
  const SymMatrix form(s.krein.gram().matrix() * s.matrix);
  NegativeSquaresMatch out;
  out.pi_A = negative_squares(p.A(), tol.zero);
  out.pi_S = negative_squares(form, tol.zero);
  out.verdict = out.pi_A == out.pi_S;
  return out;
}

double residual_indicator(int n, IndicatorCase which) {
  const SymmetricPencil p = green_kernel_pencil(GridSpec{n, Scheme::midpoint_nystrom, 0.0, 1.0});
  Matrix op = p.A().matrix();
  if (which == IndicatorCase::weighted) {
    const AbsSqrtSign parts = abs_sqrt_sign(p.B());
    op = parts.abs_sqrt_inv_on_range.matrix() * op;
  }
  Eigen::BDCSVD<Matrix> svd(op, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cutoff = sv(0) / (static_cast<double>(n) * n);
  Eigen::Index k = 0;
  while (k < sv.size() && sv(k) >= cutoff) ++k;
  const Vector c = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  const Matrix u = svd.matrixU().leftCols(k);
  return (c - u * (u.transpose() * c)).norm();
}

}  // namespace pencilkit
