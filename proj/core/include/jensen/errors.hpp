#pragma once

#include <stdexcept>
#include <string>

namespace jensen {

// An input lies outside the mathematical domain of an operation
// (negative index, k < 2, S <= 1, a Gamma pole, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numeric result could not be certified at the requested precision.
// suggested_bits() is a precision at which a retry is expected to succeed,
// or 0 when no suggestion is available.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what, long suggested_bits = 0)
      : std::runtime_error(what), suggested_bits_(suggested_bits) {}

  long suggested_bits() const noexcept { return suggested_bits_; }

 private:
  long suggested_bits_;
};

// The operation exists but does not apply to the given family
// (for instance exact root analysis of a transcendental sequence).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jensen
