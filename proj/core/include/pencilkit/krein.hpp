#pragma once

// The indefinite form [x,y] = (Gx,y) on R^n: sign cones, negative squares,
// Krein orthogonal complements and the quotient by the kernel of the form.

#include "pencilkit/linalg.hpp"

namespace pencilkit {

/// Gram matrix of [·,·] together with its fundamental symmetry J = sign(G)
/// and |G|^{±1/2}. J vanishes on Ker G.
class KreinStructure {
 public:
  explicit KreinStructure(const SymMatrix& gram, double tol_zero = kDefaultTolerances.zero);

  const SymMatrix& gram() const noexcept { return gram_; }
  const SymMatrix& J() const noexcept { return parts_.J; }
  const SymMatrix& abs_sqrt() const noexcept { return parts_.abs_sqrt; }
  const SymMatrix& abs_sqrt_inv_on_range() const noexcept { return parts_.abs_sqrt_inv_on_range; }
  const Subspace& kernel() const noexcept { return parts_.kernel; }
  int dim() const noexcept { return gram_.dim(); }
  bool nondegenerate() const noexcept { return parts_.kernel.rank() == 0; }

 private:
  SymMatrix gram_;
  AbsSqrtSign parts_;
};

enum class ConeType { positive, negative, neutral };

double krein_inner(const KreinStructure& k, const Vector& x, const Vector& y);

/// Throws ZeroVector for x = 0.
ConeType cone_type(const KreinStructure& k, const Vector& x,
                   double tol_type = kDefaultTolerances.type);

int negative_squares(const SymMatrix& form_gram, double tol_zero = kDefaultTolerances.zero);

/// F^[⊥] = {x : [x,y] = 0 for all y in F}.
Subspace krein_ortho_complement(const KreinStructure& k, const Subspace& f,
                                double tol_rank = kDefaultTolerances.rank);

/// F ∔ F^[⊥] = whole space.
bool is_ortho_complemented(const KreinStructure& k, const Subspace& f,
                           double tol_rank = kDefaultTolerances.rank);

/// Isotropic part F ∩ F^[⊥].
Subspace isotropic_part(const KreinStructure& k, const Subspace& f,
                        double tol_rank = kDefaultTolerances.rank);

/// Classes x + Ker B represented by the Euclidean-orthogonal complement of
/// Ker B. For a trivial kernel the complement basis is the identity.
struct QuotientSpace {
  int ambient_dim = 0;
  Subspace kernel;
  Matrix complement_basis;    // C, n × m orthonormal
  Matrix representative_map;  // C Cᵀ
  SymMatrix reduced_gram;     // Cᵀ B C, nonsingular

  int dim() const noexcept { return static_cast<int>(complement_basis.cols()); }
  /// Coordinates of the class of x.
  Vector coordinates(const Vector& x) const { return complement_basis.transpose() * x; }
};

/// Throws InvalidArgument when B vanishes (the quotient would be {0}).
QuotientSpace quotient_by_kernel(const SymMatrix& b, double tol_zero = kDefaultTolerances.zero);

}  // namespace pencilkit
