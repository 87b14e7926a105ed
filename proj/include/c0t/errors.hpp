#pragma once

#include <stdexcept>
#include <string>

namespace c0t {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or validation failure on caller-supplied data.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A randomized search (cone apex, separating translation, squeeze push)
/// ran out of attempts. Signals pathological input; results are never
/// silently degraded.
class RetryExhausted : public Error {
 public:
  using Error::Error;
};

/// A quantity that the construction guarantees (a positive margin, a
/// verified witness) turned out not to hold. Indicates a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace c0t
