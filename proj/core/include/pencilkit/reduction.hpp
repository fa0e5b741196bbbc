#pragma once

// Reduction of the pencil A − λB (B nonsingular) to a single operator S that
// is selfadjoint in the Krein space (R^n, [x,y] = (Jx,y)), and the checks that
// the pencil and S carry the same spectral data.
//
// Reduced coordinates are x̂ = |B|^{1/2}x, so that (Bx,y) = (Jx̂,ŷ).

#include <optional>
#include <string_view>
#include <vector>

#include "pencilkit/krein.hpp"
#include "pencilkit/pencil.hpp"

namespace pencilkit {

enum class ConstructionTag { direct, inverse_compression, relation_part };
std::string_view to_string(ConstructionTag t);

struct ReducedOperator {
  Matrix matrix;  // acts on reduced coordinates; generally not symmetric
  KreinStructure krein;
  Matrix coordinate_map;          // original -> reduced
  Matrix inverse_coordinate_map;  // reduced -> original (right inverse on the range)
  ConstructionTag construction_tag = ConstructionTag::direct;

  /// ‖G·M − (G·M)ᵀ‖ / max(1, ‖G·M‖) with G the Krein gram.
  double krein_symmetry_residual() const;
};

/// S = J|B|^{-1/2} A |B|^{-1/2}. Throws SingularB.
ReducedOperator reduce_direct(const SymmetricPencil& p, const Tolerances& tol = kDefaultTolerances);

/// S = R⁻¹ with R = |B|^{1/2} A⁻¹ |B|^{1/2} J. Throws SingularA, SingularB.
ReducedOperator reduce_via_inverse(const SymmetricPencil& p,
                                   const Tolerances& tol = kDefaultTolerances);

/// ‖S_direct − S_inverse‖ / max(1, ‖S_direct‖).
double reduction_agreement(const ReducedOperator& direct, const ReducedOperator& via_inverse);

struct EigenspaceComparison {
  Complex value;
  int pencil_dim = 0;
  int reduced_dim = 0;
  double gap = 0.0;  // sine of the largest principal angle
};

struct ChainComparison {
  Complex value;
  int length = 0;
  bool from_pencil = true;  // pencil chain mapped forward, or S chain mapped back
  double residual = 0.0;
  double roundtrip = 0.0;  // ‖x − T⁻¹T x‖ relative, forward direction only
};

struct CorrespondenceThresholds {
  double hausdorff = 1e-8;  // relative to the eigenvalue scale
  double angle = 1e-7;
  double chain = 1e-7;
};

struct CorrespondenceReport {
  std::vector<Complex> pencil_values;   // QZ route, with multiplicity
  std::vector<Complex> reduced_values;  // eigenvalues of S
  double scale = 1.0;
  double hausdorff = 0.0;
  bool counts_match = true;
  std::vector<EigenspaceComparison> eigenspaces;
  std::vector<ChainComparison> chains;
  double max_angle = 0.0;
  double max_chain_residual = 0.0;
  double krein_symmetry = 0.0;
  bool pass = false;
};

/// Throws SingularB.
CorrespondenceReport spectral_correspondence_report(const SymmetricPencil& p,
                                                    const Tolerances& tol = kDefaultTolerances,
                                                    const CorrespondenceThresholds& thr = {});

/// Maps a pencil chain to reduced coordinates and back.
JordanChain to_reduced(const ReducedOperator& s, const JordanChain& chain);
JordanChain from_reduced(const ReducedOperator& s, const JordanChain& chain);

/// max_i ‖(S − λ)x̂_i − x̂_{i−1}‖ / (max(1,‖S‖+|λ|) · max_j ‖x̂_j‖).
double reduced_chain_residual(const ReducedOperator& s, const JordanChain& chain);

/// Jordan chains of the reduced operator itself: (S − λ)y_i = y_{i−1}.
std::vector<JordanChain> reduced_jordan_chains(const ReducedOperator& s, Complex lambda,
                                               const Tolerances& tol = kDefaultTolerances,
                                               int max_multiplicity = 0);

struct NegativeSquaresMatch {
  int pi_A = 0;
  int pi_S = 0;
  bool verdict = false;
};

/// π(A) against π of the form [Sx,y] = (|B|^{-1/2}A|B|^{-1/2}x, y). Throws SingularB.
NegativeSquaresMatch negative_squares_match(const SymmetricPencil& p,
                                            const Tolerances& tol = kDefaultTolerances);

enum class IndicatorCase {
  weighted,  // |B_n|^{-1/2} A_n for the (2x−1)-weighted Green-kernel pencil
  control,   // A_n alone (B replaced by the identity)
};

/// Relative distance of the normalized constant vector from the resolved
/// range of the operator: the span of left singular vectors with
/// σ_k ≥ σ_1/n². Requires an even n ≥ 4.
double residual_indicator(int n, IndicatorCase which = IndicatorCase::weighted);

}  // namespace pencilkit
