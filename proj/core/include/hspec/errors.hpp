#pragma once

#include <stdexcept>
#include <string>

namespace hspec {

// Bad group parameters, indices or configuration values.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vectors or subspaces of incompatible length / ambient dimension / modulus.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An inclusion that an operation requires does not hold.
class ContainmentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A subgroup closure left the split form <x^(p^m)> S with S inside H.
class SplitFormError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Requested parameters exceed the feasibility table or a time cap.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The brute-force referee disagrees with itself (indicates a core bug).
class OracleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hspec
