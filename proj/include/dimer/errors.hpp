#pragma once

#include <stdexcept>
#include <string>

namespace dimer {

/// Argument outside the domain of a formula (T <= 0, omega0 <= 0, t < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Both the renormalized gap and the intersite coupling vanish, so the
/// mixing angle is undefined.
class DegenerateDimerError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Integration step violates the stability bound of the fixed-step propagator.
class StepSizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A discrete bath mode sits exactly on the exciton resonance, where the
/// principal-value sum is singular.
class ResonantModeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A search (root or minimum) found nothing in its admissible range.
class NoSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user configuration; `field()` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dimer
