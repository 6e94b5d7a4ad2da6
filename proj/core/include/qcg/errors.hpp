#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcg {

/// Malformed or inconsistent user input: game files, lassos, bounds.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in a game document, tagged with its line.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configured enumeration or size cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial fast path was asked to solve a game outside its fragment.
class FragmentInapplicable : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace qcg
