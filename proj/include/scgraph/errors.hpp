#pragma once

#include <stdexcept>
#include <string>

namespace scgraph {

/// Malformed input or a violated precondition (bad graph6, size mismatch,
/// graph that is not self-complementary where one is required).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to run above its configured vertex cap.
class GuardExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A constructed witness failed its independent verification. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace scgraph
