#pragma once

#include <stdexcept>
#include <string>

namespace thuelab {

/// An operation was called outside its domain (bad input, violated precondition).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-posed computation could not be completed (precision cap reached,
/// uncertified result, search exhausted).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thuelab
