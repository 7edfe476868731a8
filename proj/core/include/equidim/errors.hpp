#pragma once

#include <stdexcept>
#include <string>

namespace equidim {

// Malformed or inconsistent input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, std::string pointer = "")
      : std::runtime_error(what), pointer_(std::move(pointer)) {}
  // JSON pointer into the input document, empty when not applicable.
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// A degree or candidate cap was hit (CLI exit code 3). Never a silent truncation.
class ResourceCapError : public std::runtime_error {
 public:
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computations that must agree did not.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// The fiber of a character is empty, so R_chi = 0.
class CharacterNotRealized : public std::runtime_error {
 public:
  explicit CharacterNotRealized(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace equidim
