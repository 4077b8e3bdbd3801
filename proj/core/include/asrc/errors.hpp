#pragma once

#include <stdexcept>

namespace asrc {

/// Malformed or inconsistent configuration (dimension mismatch, bad field).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input outside the domain of an operation (negative norm, psi = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Plant parameters that violate the mass-matrix assumptions.
class InvalidPlantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A controller invariant was violated on input (e.g. gains below their floors).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A polynomial or analysis object lacks the structure an algorithm relies on.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace asrc
