#pragma once

#include <stdexcept>
#include <string>

namespace liecurv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(actual)) {}
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class DegeneratePlane : public Error {
 public:
  using Error::Error;
};

class NotIsometric : public Error {
 public:
  using Error::Error;
};

class NotAdInvariant : public Error {
 public:
  using Error::Error;
};

class NotDivergenceFree : public Error {
 public:
  using Error::Error;
};

class MidpointDivergence : public Error {
 public:
  using Error::Error;
};

class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace liecurv
