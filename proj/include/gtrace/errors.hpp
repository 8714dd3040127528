#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gtrace {

/// Malformed user input: bad cycle notation, unknown group name, invalid partition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration or expansion bound would be exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& bound, std::uint64_t limit, const std::string& what)
      : std::runtime_error(what + " (exceeds " + bound + "=" + std::to_string(limit) + ")"),
        bound_(bound),
        limit_(limit) {}

  const std::string& bound() const noexcept { return bound_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string bound_;
  std::uint64_t limit_;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gtrace
