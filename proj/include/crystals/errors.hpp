#pragma once

#include <stdexcept>
#include <string>

namespace crystals {

// Base class for every domain error raised by the library. The CLI maps
// these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCartan : public Error {
 public:
  using Error::Error;
};

// Malformed crystal graph: cycles, out-of-range ids, rank mismatches.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class AxiomError : public Error {
 public:
  using Error::Error;
};

class BuildError : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace crystals
