#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (shapes, parse failures, characteristic 2).
struct InputError : Error {
  using Error::Error;
};

struct DimensionMismatch : InputError {
  using InputError::InputError;
};

struct FieldMismatch : Error {
  using Error::Error;
};

// A product would leave the truncation window of the smash algebra.
struct CutoffOverflow : Error {
  using Error::Error;
};

struct Condition456Undefined : Error {
  Condition456Undefined() : Error("conditions (4) and (5) are undefined because condition (6) fails") {}
};

struct BracketUndefined : Error {
  BracketUndefined() : Error("brackets on X_{3,0} are undefined because condition (6) fails") {}
};

struct NotSymmetricAlgebra : Error {
  NotSymmetricAlgebra()
      : Error("relation space is not the antisymmetric subspace; polynomial mode does not apply") {}
};

struct UntabulatedInput : Error {
  using Error::Error;
};

struct CeilingExceeded : Error {
  std::size_t required;
  CeilingExceeded(std::size_t req, std::size_t ceiling)
      : Error("working dimension " + std::to_string(req) + " exceeds ceiling " +
              std::to_string(ceiling)),
        required(req) {}
};

}  // namespace pbw
