#pragma once

#include <stdexcept>
#include <string>

namespace riskexplain {

// Base class for all library errors. The CLI maps subclasses to exit codes,
// so new error types must pick one of the existing categories.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable files, unmappable columns, malformed config: exit code 2.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// A class selector that matches nothing: exit code 3.
class SelectionError : public Error {
 public:
  explicit SelectionError(const std::string& what) : Error(what) {}
};

// Generation failures (HTTP, credentials, malformed responses): exit code 4.
class BackendError : public Error {
 public:
  explicit BackendError(const std::string& what) : Error(what) {}
};

class AuthError : public BackendError {
 public:
  explicit AuthError(const std::string& what) : BackendError(what) {}
};

}  // namespace riskexplain
