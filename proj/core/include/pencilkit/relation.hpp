#pragma once

// Linear relations in a finite-dimensional (possibly degenerate) Krein space:
// graphs stored as orthonormal bases of subspaces of R^n × R^n, the stacked
// vector being (x; y).

#include <optional>
#include <vector>

#include "pencilkit/krein.hpp"
#include "pencilkit/pencil.hpp"
#include "pencilkit/reduction.hpp"

namespace pencilkit {

class LinearRelation {
 public:
  LinearRelation(int ambient_dim, Subspace graph, SymMatrix gram);

  /// Orthonormalizes the stacked pairs (2n × k).
  static LinearRelation from_pairs(const Matrix& pairs, const SymMatrix& gram,
                                   double tol_rank = kDefaultTolerances.rank);
  static LinearRelation graph_of(const Matrix& op, const SymMatrix& gram);
  static LinearRelation identity(const SymMatrix& gram);
  /// {0} × span(f).
  static LinearRelation purely_multivalued(const Matrix& f, const SymMatrix& gram);
  /// H × H.
  static LinearRelation full(const SymMatrix& gram);

  int ambient_dim() const noexcept { return n_; }
  const Subspace& graph() const noexcept { return graph_; }
  const SymMatrix& gram() const noexcept { return gram_; }
  int dim() const noexcept { return graph_.rank(); }

  /// First components of the graph basis (n × dim).
  Matrix domain_part() const { return graph_.basis().topRows(n_); }
  /// Second components of the graph basis (n × dim).
  Matrix range_part() const { return graph_.basis().bottomRows(n_); }
  Subspace domain() const;

 private:
  int n_;
  Subspace graph_;
  SymMatrix gram_;
};

/// ‖P₁ − P₂‖ for the graph projectors; 1 when the dimensions differ.
double graph_distance(const LinearRelation& a, const LinearRelation& b);

/// S₀ = {(x, y) : Ax = By}, with the (possibly degenerate) gram B.
LinearRelation relation_from_pencil(const SymmetricPencil& p, const Tolerances& tol = kDefaultTolerances);

struct MultivaluedPart {
  Subspace pairs;     // T_∞ = T ∩ ({0} × H), ambient 2n
  Subspace values;    // T(0)
};

MultivaluedPart multivalued_part(const LinearRelation& t, const Tolerances& tol = kDefaultTolerances);

/// T* = {(h, k) : [k, x] = [h, y] for all (x, y) in T}.
LinearRelation relation_adjoint(const LinearRelation& t, const Tolerances& tol = kDefaultTolerances);

struct OperatorPart {
  LinearRelation graph;             // T_s = T ∩ (T_∞)^[⊥], original coordinates
  Subspace space;                   // T(0)^[⊥]
  std::optional<ReducedOperator> op;  // matrix on coordinates of `space`, when D(T_s) fills it
  bool is_operator = false;         // T_s(0) = {0}
  bool domain_matches = false;      // D(T_s) = D(T)
  bool range_in_space = false;      // R(T_s) ⊂ T(0)^[⊥]
  double spectrum_distance = 0.0;   // Hausdorff(σ_p(T), σ_p(T_s))
  bool point_spectra_match = false;
  double t_adjoint_distance = 0.0;  // graph distance T* vs T
  double ts_adjoint_distance = 0.0; // same for T_s inside T(0)^[⊥]
  bool t_selfadjoint = false;
  bool ts_selfadjoint = false;
  bool selfadjoint_equivalence = false;
};

/// Throws NotOrthoComplemented carrying T(0) ∩ T(0)^[⊥] as witness.
OperatorPart operator_part(const LinearRelation& t, const Tolerances& tol = kDefaultTolerances,
                           double selfadjoint_tol = 1e-9);

struct RelationEigen {
  Complex value;
  int multiplicity = 1;
  CMatrix eigenvectors;  // x with (x, λx) in T
};

struct RelationSpectrum {
  bool all_lambda = false;  // every λ is an eigenvalue (e.g. a singular pencil)
  std::vector<RelationEigen> eigen;

  std::vector<Complex> values() const;
};

RelationSpectrum relation_eigenvalues(const LinearRelation& t, const Tolerances& tol = kDefaultTolerances);

/// S̃ = {([x],[y]) : x − A⁻¹By ∈ Ker B} on the quotient by Ker B, in the
/// coordinates of quotient_by_kernel(B), with gram Cᵀ B C. Throws SingularA.
LinearRelation stilde_quotient(const SymmetricPencil& p, const Tolerances& tol = kDefaultTolerances);

struct OrthoConditions {
  bool cond_range = false;      // R(B) ∩ A Ker B = {0}
  bool cond_invariant = false;  // A Ker B ⊂ Ker B
};

OrthoConditions orthocomplemented_conditions(const SymmetricPencil& p,
                                             const Tolerances& tol = kDefaultTolerances);

}  // namespace pencilkit
