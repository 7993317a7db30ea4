#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclotl {

// An argument violates the documented precondition of an operation.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input does not match a grammar; position is a 0-based byte offset.
class parse_error : public std::invalid_argument {
 public:
  parse_error(std::string const& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        _position(position) {}

  std::size_t position() const noexcept { return _position; }

 private:
  std::size_t _position;
};

// A brute-force computation was asked to handle more elements than it allows.
class size_guard_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace cyclotl
