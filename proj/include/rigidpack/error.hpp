#pragma once

#include <stdexcept>
#include <string>

namespace rigidpack {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or input-format violation (bad vertex, loop edge, malformed spec).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive sweep was asked to run beyond its configured size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction produced output that failed its own post-verification.
/// Always indicates an engine bug; never returned as a normal result.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rigidpack
