#pragma once

#include <stdexcept>
#include <string>

namespace pottssos {

// Argument outside the mathematical domain of an operation (negative
// activity, spin label out of range, bad grid bounds).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// exp() of a coupling product is not representable as a finite double.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// The operation is only defined for a specific state count (periodic
// analysis is m = 2 only).
class UnsupportedDimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration would exceed the configured vertex cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A solver produced a result that fails its own post-condition. Indicates
// an algebra or numerics bug rather than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ModelParams built from activities has no J, Jp, beta.
class CouplingsUnavailable : public std::logic_error {
 public:
  CouplingsUnavailable() : std::logic_error("couplings unavailable") {}
};

}  // namespace pottssos
