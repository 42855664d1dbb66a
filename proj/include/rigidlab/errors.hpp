#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rigidlab {

/// Malformed user input: bad polynomial text, bad graph file, unknown names.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public InputError {
 public:
  explicit UnknownVariableError(const std::string& name)
      : InputError("unknown variable '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Thrown when a computation would exceed a configured bound (pair count,
/// basis size, graph size). Never a silent truncation.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rigidlab
