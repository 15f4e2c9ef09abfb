#pragma once

#include <stdexcept>
#include <string>

namespace longtube {

// Raised when an argument falls outside the domain on which a formula is defined.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a numerical procedure cannot produce a trustworthy value.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace longtube
