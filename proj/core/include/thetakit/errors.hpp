#pragma once

#include <stdexcept>
#include <string>

namespace thetakit {

/// Input outside an operation's mathematical domain (odd Bernoulli index,
/// non-prime residue characteristic, D <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation is well defined but this implementation does not cover it
/// (e.g. the counting oracle for hermitian lattices of rank > 1).
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An enumeration would exceed its configured candidate budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical or combinatorial procedure did not produce a usable result
/// (non-stabilized counts, non-integral interpolation, AGM non-convergence).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed value failed its acceptance check.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace thetakit
