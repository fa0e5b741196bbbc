#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pencilkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// An iterative kernel did not converge; carries the best residual reached.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class SingularPencil : public Error {
 public:
  using Error::Error;
};

class SingularA : public Error {
 public:
  using Error::Error;
};

class SingularB : public Error {
 public:
  using Error::Error;
};

class NotAnEigenvalue : public Error {
 public:
  NotAnEigenvalue(const std::string& what, double margin)
      : Error(what), margin_(margin) {}
  /// Smallest singular value of L(λ0) relative to the residual scale.
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

/// Raised when T(0) is degenerate in the Krein form. The witness columns span
/// T(0) ∩ T(0)^[⊥].
class NotOrthoComplemented : public Error {
 public:
  NotOrthoComplemented(const std::string& what, Eigen::MatrixXd witness)
      : Error(what), witness_(std::move(witness)) {}
  const Eigen::MatrixXd& witness() const noexcept { return witness_; }

 private:
  Eigen::MatrixXd witness_;
};

class DegenerateTrialSpace : public Error {
 public:
  using Error::Error;
};

class EmptyConeIntersection : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class OddGrid : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace pencilkit
