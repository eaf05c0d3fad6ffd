#pragma once

#include <stdexcept>
#include <string>

namespace quadsg {

/// A configured budget (terms, pairs, candidates) ran out before a decision.
/// This is "undecided", never a mathematical "no".
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace quadsg
