#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kreg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects over different digit alphabets were combined.
class IncompatibleBase : public Error {
 public:
  IncompatibleBase(int expected, int actual)
      : Error("incompatible alphabet: expected base " + std::to_string(expected) + ", got base " +
              std::to_string(actual)) {}
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A file could not be parsed or did not match its schema.
class FormatError : public Error {
 public:
  FormatError(std::string path, std::size_t byte_offset, const std::string& what)
      : Error(path + ": byte " + std::to_string(byte_offset) + ": " + what),
        path_(std::move(path)),
        byte_offset_(byte_offset) {}

  const std::string& path() const { return path_; }
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::string path_;
  std::size_t byte_offset_;
};

}  // namespace kreg
