#pragma once

// The symmetric pencil L(λ) = A − λB: finite spectrum, sign types, regular-type
// margins, Jordan chains and the isotropy test.

#include <string_view>
#include <vector>

#include "pencilkit/linalg.hpp"

namespace pencilkit {

class SymmetricPencil {
 public:
  SymmetricPencil(SymMatrix a, SymMatrix b);

  const SymMatrix& A() const noexcept { return a_; }
  const SymMatrix& B() const noexcept { return b_; }
  int dim() const noexcept { return a_.dim(); }

  /// L(λ) as a complex matrix.
  CMatrix at(Complex lambda) const;
  /// Natural size of ‖L(λ)x‖ for a unit x: ‖A‖ + |λ|‖B‖ (at least 1e-300).
  double residual_scale(Complex lambda) const;

 private:
  SymMatrix a_;
  SymMatrix b_;
};

enum class SignType { positive, negative, neutral, complex };
std::string_view to_string(SignType t);

/// x₀,…,x_k with L(λ₀)x_i = B x_{i−1}, x_{−1} = 0.
struct JordanChain {
  Complex eigenvalue;
  std::vector<CVector> vectors;

  int length() const noexcept { return static_cast<int>(vectors.size()); }
};

struct EigenItem {
  Complex value;
  int algebraic_multiplicity = 1;
  CMatrix eigenvectors;  // orthonormal columns spanning ker L(value)
  SignType sign_type = SignType::complex;
  std::vector<JordanChain> chains;  // filled only on request
  double residual = 0.0;  // max ‖L(value)x‖ / residual_scale over the eigenvectors
};

struct PencilSpectrum {
  std::vector<EigenItem> items;
  int infinite_count = 0;  // dim minus degree of det(A − λB)

  /// Finite eigenvalues repeated by algebraic multiplicity.
  std::vector<Complex> multiset() const;
};

/// Finite eigenvalues of the pencil. Uses the reduced operator when B is
/// nonsingular and the QZ route otherwise. Throws SingularPencil.
PencilSpectrum pencil_eigenvalues(const SymmetricPencil& p,
                                  const Tolerances& tol = kDefaultTolerances,
                                  bool with_chains = false);

/// Determinant-interpolation route: samples det(A − λB) on a circle, recovers
/// the coefficients by a discrete Fourier transform, solves the companion
/// problem and polishes each root by Newton steps on det.
PencilSpectrum pencil_eigenvalues_det(const SymmetricPencil& p,
                                      const Tolerances& tol = kDefaultTolerances,
                                      bool with_chains = false);

/// QZ route: generalized Schur form of (A, B). The number of finite
/// eigenvalues is the degree of det(A − λB), read off the interpolated
/// polynomial when B is singular; the pairs with the largest chordal |β| are
/// taken as the finite ones.
PencilSpectrum pencil_eigenvalues_qz(const SymmetricPencil& p,
                                     const Tolerances& tol = kDefaultTolerances,
                                     bool with_chains = false);

bool is_singular_pencil(const SymmetricPencil& p, const Tolerances& tol = kDefaultTolerances);

/// σ_min(A − λB).
double regular_type_margin(const SymmetricPencil& p, Complex lambda);

/// Canonical set of Jordan chains at λ0. Throws NotAnEigenvalue.
/// A positive `max_multiplicity` caps the total chain length; pass the
/// algebraic multiplicity when it is known.
std::vector<JordanChain> jordan_chains(const SymmetricPencil& p, Complex lambda0,
                                       const Tolerances& tol = kDefaultTolerances,
                                       int max_multiplicity = 0);

/// Chains of a general pair with L0 = L(λ0) and derivative term `rhs`:
/// L0 x_i = rhs·x_{i−1}. Ordinary matrix chains use rhs = I.
std::vector<JordanChain> jordan_chains_general(const CMatrix& l0, const CMatrix& rhs,
                                               Complex lambda0, double tol_chain,
                                               int max_multiplicity = 0);

/// max_i ‖L(λ₀)x_i − B x_{i−1}‖ / (residual_scale · max_j ‖x_j‖).
double chain_residual(const SymmetricPencil& p, const JordanChain& chain);

/// Groups computed eigenvalues (closed under conjugation) into clusters by
/// relative distance; each cluster is represented by its mean.
std::vector<std::pair<Complex, int>> cluster_eigenvalues(const std::vector<Complex>& values,
                                                         double tol_cluster);

struct NonisotropyCheck {
  bool verdict = true;
  std::vector<EigenItem> witnesses;
};

NonisotropyCheck check_nonisotropic(const SymmetricPencil& p,
                                    const Tolerances& tol = kDefaultTolerances);

/// Sign type of the eigenspace E: the compressed form EᴴBE decides.
SignType eigenspace_sign_type(const SymMatrix& b, const CMatrix& eigenvectors, Complex value,
                              double scale, const Tolerances& tol);

/// Hausdorff distance between two finite point sets in ℂ (0 if both empty,
/// +inf if exactly one is empty).
double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// max(1, max|λ|) over the given values.
double eigenvalue_scale(const std::vector<Complex>& values);

}  // namespace pencilkit
