#pragma once

// Seeded random pencils and relations used by the verification batch, the
// acceptance suite and the benchmarks. Every generator draws from the engine
// it is given, so a case is reproducible from (seed, index) alone.

#include <cstdint>
#include <random>
#include <vector>

#include "pencilkit/pencil.hpp"
#include "pencilkit/relation.hpp"

namespace pencilkit {

using Rng = std::mt19937_64;

/// splitmix64 of base ⊕ index: independent per-case seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

Matrix random_matrix(int rows, int cols, Rng& rng);
SymMatrix random_symmetric(int n, Rng& rng);
Matrix random_orthogonal(int n, Rng& rng);
Subspace random_subspace(int n, int k, Rng& rng);

/// Q diag(d) Qᵀ with |d_i| ∈ [0.5, 2] and exactly n_minus negative entries.
SymMatrix random_nonsingular_symmetric(int n, int n_minus, Rng& rng);

/// Random A, nonsingular B whose number of negative eigenvalues is uniform in
/// [0, n] (`mixed` forces both signs, n ≥ 2).
SymmetricPencil random_indefinite_pencil(int n, Rng& rng, bool mixed = false);

/// A = GGᵀ/n + 0.1I + σB with σ ∈ [−1, 1] and B of mixed inertia: A − σB is
/// positive definite, so all eigenvalues are real and of definite type.
SymmetricPencil random_definite_pencil(int n, Rng& rng);

struct JordanBlockSpec {
  Complex eigenvalue;
  int size = 1;
  int sign = 1;  // sign characteristic ε of a real block
};

struct JordanPencil {
  SymmetricPencil pencil;
  std::vector<JordanBlockSpec> blocks;
};

/// Direct sum of symmetric Jordan normal blocks ε(λF + FN), εF (F the flip,
/// N the nilpotent shift) with distinct eigenvalues, at least one block of
/// size ≥ 2, optionally one complex pair block, under a random congruence.
JordanPencil random_jordan_pencil(int n, Rng& rng, bool allow_complex = true);

/// B = Q diag(B₁, 0_k) Qᵀ, A = Q diag(A₁, A₂) Qᵀ: Ker B is A-invariant, A and
/// B₁ nonsingular.
SymmetricPencil invariant_kernel_pencil(int n, int k, Rng& rng);

/// A pencil with a one-dimensional Ker B whose quotient relation has a
/// neutral T(0), embedded in dimension n ≥ 3 by a definite direct summand
/// and a random orthogonal change of basis.
SymmetricPencil neutral_multivalued_pencil(int n, Rng& rng);

/// T = {(x, Mx + f) : x ∈ F^[⊥], f ∈ F} with F nondegenerate (dim k), M Krein
/// symmetric on F^[⊥] when `selfadjoint` and arbitrary otherwise.
LinearRelation random_multivalued_relation(int n, int k, Rng& rng, bool selfadjoint = true);

/// {0} × span{v} ∔ graph of a random map on a complement, v neutral.
LinearRelation neutral_relation(int n, Rng& rng);

}  // namespace pencilkit
