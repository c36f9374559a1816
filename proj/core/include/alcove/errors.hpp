#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownTypeError : public Error {
 public:
  using Error::Error;
};

class TypeUnsupportedError : public Error {
 public:
  using Error::Error;
};

class InvalidWordError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration cap was exceeded.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace alcove
