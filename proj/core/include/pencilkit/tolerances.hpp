#pragma once

namespace pencilkit {

// All thresholds are relative: spectral splits against the spectral norm of the
// matrix being split, residuals against the natural scale of the operator.
struct Tolerances {
  double zero = 1e-10;     // spectral split of B, inertia
  double ortho = 1e-12;    // orthonormality of subspace bases
  double rank = 1e-10;     // rank-revealing drops and null spaces
  double eig = 1e-8;       // eigen-residuals and "is an eigenvalue" tests
  double type = 1e-8;      // sign-type threshold on [x,x]
  double imag = 1e-9;      // imaginary part considered zero
  double chain = 1e-8;     // Jordan chain residuals
  double det = 1e-12;      // singular-pencil detection
  double cluster = 1e-5;   // merging computed eigenvalues into one item
  double bound = 1e-9;     // slack of Rayleigh-Ritz verdicts
};

inline const Tolerances kDefaultTolerances{};

}  // namespace pencilkit
