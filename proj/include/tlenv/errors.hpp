#pragma once

#include <stdexcept>
#include <string>

namespace tlenv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by an exact zero.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Numeric evaluation at a root of a denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Malformed box shape or matching.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Incompatible gluing or a non-planar tangle.
class GluingError : public Error {
 public:
  using Error::Error;
};

class ClassificationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Gram matrix singular at the requested modulus.
class DegenerateModulusError : public Error {
 public:
  using Error::Error;
};

class ReconstructionMismatch : public Error {
 public:
  using Error::Error;
};

// Input document violates the schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace tlenv
