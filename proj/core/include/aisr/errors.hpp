#pragma once

#include <stdexcept>

namespace aisr {

// Malformed data: wrong table dimensions, out-of-range entries, unparsable text.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was invoked outside its stated domain.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fixed search or size budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A law the operation relies on failed on concrete data. The message carries
// a witness; callers surface it verbatim instead of repairing the result.
class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aisr
