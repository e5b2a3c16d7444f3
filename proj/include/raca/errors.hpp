#pragma once

#include <stdexcept>
#include <string>

namespace raca {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed input data (files, command-line literals).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds the supported problem size.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace raca
