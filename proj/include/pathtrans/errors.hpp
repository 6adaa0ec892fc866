#pragma once

#include <stdexcept>
#include <string>

namespace pathtrans {

/// Raised when an argument violates a domain/interval/shape precondition.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when arithmetic goes bad: singular matrices, non-finite values,
/// group-invariant violations, cancellation guards.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the CLI layer for malformed configs and descriptors.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pathtrans
