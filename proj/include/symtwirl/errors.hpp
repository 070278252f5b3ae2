#pragma once

#include <stdexcept>
#include <string>

namespace symtwirl {

/// Requested object exceeds a configured size limit (d^n cap, n! cap, ...).
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Operands with incompatible n or matrix dimensions.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An input violates a stated numerical or algebraic contract
/// (non-Hermitian where Hermitian is required, weights not summing to one, ...).
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace symtwirl
