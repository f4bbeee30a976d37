#pragma once

#include <stdexcept>
#include <string>

namespace k3cover {

// Base of every error raised by the library. The CLI maps any Error to exit
// code 3 (invalid input data).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class DegenerateLatticeError : public Error {
 public:
  using Error::Error;
};

class InvalidGlueError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace k3cover
