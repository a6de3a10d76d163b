#pragma once

#include <stdexcept>
#include <string>

namespace subindex {

// Input exceeds a documented engine limit (sieve range, modulus width, ...).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failure (unwritable path, short read, rename failure).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A structured file (checkpoint, CSV, report) does not match its format.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A checkpoint was produced under a different configuration than the
// one it is being resumed with.
class ConfigMismatchError : public std::runtime_error {
 public:
  explicit ConfigMismatchError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace subindex
