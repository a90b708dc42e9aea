#pragma once

#include <stdexcept>
#include <string>

namespace ktheta {

/// Invalid user-supplied data (bad topological type, malformed form bits, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The theta characteristic is not invariant under the real structure.
class NotRealError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The real locus is empty, so the Stiefel-Whitney map is undefined.
class EmptyRealLocusError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A mathematical invariant or oracle cross-check failed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ktheta
