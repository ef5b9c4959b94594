#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpt {

// Root of every error the library raises. Callers that only care about
// "something went wrong in wpt" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

// A state does not satisfy the precondition of the operation (e.g. an
// unassigned code where a full assignment is needed).
class InvalidState : public Error {
 public:
  using Error::Error;
};

// Environment stepped out of order: rollout agent mismatch, joint step on an
// intermediate state, or stepping a finished episode.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

// Non-finite loss or gradient during training.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Unreadable/unwritable files and malformed data files.
class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wpt
