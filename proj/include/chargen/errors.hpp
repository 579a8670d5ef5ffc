#pragma once

#include <stdexcept>
#include <string>

namespace chargen {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VarSetMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

class NonInvertibleBinding : public Error {
 public:
  using Error::Error;
};

class DenominatorNotUnit : public Error {
 public:
  using Error::Error;
};

class ExponentOutOfCaps : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NonIntegral : public Error {
 public:
  using Error::Error;
};

class NonDominantWeight : public Error {
 public:
  using Error::Error;
};

class EigenvalueCollision : public Error {
 public:
  using Error::Error;
};

class NegativeExponentInput : public Error {
 public:
  using Error::Error;
};

class UnknownKind : public Error {
 public:
  using Error::Error;
};

class UnsupportedWeight : public Error {
 public:
  using Error::Error;
};

// Raised when a runtime consistency assertion on transcribed data fails
// (e.g. a closed form that must be divisible by 6 is not).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace chargen
