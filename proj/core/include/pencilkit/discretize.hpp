#pragma once

// Generators turning the one-dimensional model problems on an interval into
// SymmetricPencil instances: a midpoint Nyström rule for the integral operator
// with kernel min(x, ξ), multiplication operators, and the piecewise-linear
// Galerkin Laplacian with (weighted) mass matrices.

#include <functional>
#include <string_view>

#include "pencilkit/pencil.hpp"

namespace pencilkit {

enum class Scheme { midpoint_nystrom, piecewise_linear_fem };
enum class OperatorSource { green_kernel, identity, fem_laplacian };
enum class Boundary { dirichlet_dirichlet, dirichlet_neumann };

std::string_view to_string(Scheme s);
std::string_view to_string(OperatorSource s);
std::string_view to_string(Boundary b);

/// n nodes on (a, b). Nyström nodes are cell midpoints a + (i + ½)h with
/// h = (b − a)/n; FEM nodes include both endpoints, h = (b − a)/(n − 1).
struct GridSpec {
  int n = 32;
  Scheme scheme = Scheme::midpoint_nystrom;
  double a = 0.0;
  double b = 1.0;

  /// Throws InvalidArgument unless n ≥ 4 and a < b.
  void validate() const;
  double h() const;
  Vector nodes() const;
};

/// The kernel as printed: G(x, ξ) = x for x ≤ ξ and ξ for x ≥ ξ, i.e. min(x, ξ).
/// Continuous eigenpairs: 1/((k − ½)²π²), sin((k − ½)πx).
double green_kernel(double x, double xi);

/// A_n = h·G(x_i, x_j), B_n = diag(2x_i − 1) on (0, 1). Throws OddGrid when a
/// node falls on x = ½ (odd n).
SymmetricPencil green_kernel_pencil(const GridSpec& g);

/// Stiffness matrix of −f″ for continuous piecewise-linear elements. Dirichlet
/// nodes are eliminated: n − 2 unknowns (dirichlet-dirichlet) or n − 1
/// (dirichlet-neumann, natural condition at b).
SymMatrix fem_laplacian(const GridSpec& g, Boundary boundary = Boundary::dirichlet_dirichlet);

/// ∫ w φ_i φ_j by three-point Gauss quadrature per element, same unknowns as
/// fem_laplacian.
SymMatrix fem_mass(const GridSpec& g, Boundary boundary = Boundary::dirichlet_dirichlet,
                   const std::function<double(double)>& weight = {});

/// B_n = diag(w(x_i)) with A_n from the Nyström kernel or the identity, or the
/// FEM pair (stiffness, w-weighted mass). The A source must match the scheme.
SymmetricPencil weighted_multiplication_pencil(const std::function<double(double)>& w,
                                               const GridSpec& g, OperatorSource source,
                                               Boundary boundary = Boundary::dirichlet_dirichlet);

}  // namespace pencilkit
