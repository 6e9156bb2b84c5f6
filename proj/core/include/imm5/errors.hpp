#pragma once

#include <stdexcept>
#include <string>

namespace imm5 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class AsymmetricMatrix : public Error {
 public:
  using Error::Error;
};

/// Half-integer invariant: the numeric data cannot come from a genuine filling.
class ParityError : public Error {
 public:
  using Error::Error;
};

class InvalidSpinStructure : public Error {
 public:
  using Error::Error;
};

/// The two classes lie in different Wu components.
class WuMismatch : public Error {
 public:
  using Error::Error;
};

class CosetUncovered : public Error {
 public:
  using Error::Error;
};

/// A base signature has the wrong parity relative to alpha.
class ParityViolation : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class MissingData : public Error {
 public:
  using Error::Error;
};

/// A record breaks one of its own structural invariants.
class InvalidRecord : public Error {
 public:
  using Error::Error;
};

}  // namespace imm5
