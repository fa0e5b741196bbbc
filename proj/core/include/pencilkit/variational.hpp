#pragma once

// Rayleigh–Ritz for indefinite pencils: compress the pair to a trial subspace,
// classify the projected eigenvalues by sign type and compare them with the
// full problem.

#include <cstdint>
#include <vector>

#include "pencilkit/krein.hpp"
#include "pencilkit/pencil.hpp"

namespace pencilkit {

struct ProjectedPencil {
  SymMatrix A_V;
  SymMatrix B_V;
};

/// (VᵀAV, VᵀBV) for the orthonormal basis of V. Throws DegenerateTrialSpace
/// when B_V is singular relative to ‖B‖.
ProjectedPencil project_pencil(const SymmetricPencil& p, const Subspace& v,
                               const Tolerances& tol = kDefaultTolerances);

struct ClassifiedEigenvalues {
  std::vector<double> mu_plus;    // positive type, ascending, repeated by multiplicity
  std::vector<double> mu_minus;   // negative type, descending
  std::vector<Complex> neutral_or_complex;
};

/// Throws DegenerateTrialSpace when B_V is singular.
ClassifiedEigenvalues classified_projected_eigenvalues(const SymMatrix& a_v, const SymMatrix& b_v,
                                                       const Tolerances& tol = kDefaultTolerances);

/// Type-classified finite eigenvalues of any regular pencil, same ordering.
ClassifiedEigenvalues classified_eigenvalues(const SymmetricPencil& p,
                                             const Tolerances& tol = kDefaultTolerances);

struct RayleighRitzReport {
  int trial_dim = 0;
  SymMatrix projected_A = SymMatrix::zero(1);
  SymMatrix projected_B = SymMatrix::zero(1);
  std::vector<double> mu_plus;
  std::vector<double> mu_minus;
  std::vector<Complex> neutral_or_complex;
  std::vector<double> full_plus;
  std::vector<double> full_minus;
  double scale = 1.0;
  std::vector<bool> bound_verdicts;  // mu_plus[m] ≥ full_plus[m + offset] − tol.bound·scale
  std::vector<bool> minus_verdicts;  // mu_minus[m] ≤ full_minus[m + offset] + tol.bound·scale

  bool all_pass() const;
};

/// `index_offset` shifts the full-problem index (a known spectral shift d⁺).
/// Throws SingularB, DegenerateTrialSpace.
RayleighRitzReport rayleigh_ritz_bounds(const SymmetricPencil& p, const Subspace& v,
                                        const Tolerances& tol = kDefaultTolerances,
                                        int index_offset = 0);

enum class Cone { positive, negative };

/// Estimate of the extreme Rayleigh quotient (Ax,x)/(Bx,x) over M ∩ cone: the
/// infimum on the positive cone, the supremum on the negative cone (the
/// negative-type ordering is descending). Combines the in-cone eigenvectors of
/// the compressed pair with `samples` random directions drawn from `seed`.
/// Throws EmptyConeIntersection.
double rayleigh_quotient_scan(const SymmetricPencil& p, const Subspace& m, Cone cone, int samples,
                              std::uint64_t seed = 0, const Tolerances& tol = kDefaultTolerances);

struct SupInfEstimate {
  double value = 0.0;
  int evaluations = 0;
  int rejected = 0;  // sampled constraint spaces that were degenerate in B_V
};

/// Direct evaluation of
///   μ_m = sup over Y ⊂ R^k, dim Y = m−1, Y nondegenerate for B_V, of
///         inf { (A_V x,x)/(B_V x,x) : x [⊥] Y, (B_V x,x) > 0 },
/// by random starts refined with Nelder–Mead over the entries of a basis of Y.
/// The inner infimum is the smallest positive-type eigenvalue of the pair
/// compressed to Y^[⊥]. Intended for small k.
SupInfEstimate sup_inf_estimate(const SymMatrix& a_v, const SymMatrix& b_v, int m, int samples,
                                std::uint64_t seed = 0, const Tolerances& tol = kDefaultTolerances);

}  // namespace pencilkit
