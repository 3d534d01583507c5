#pragma once

#include <stdexcept>
#include <string>

namespace derivlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& what) : Error("ring mismatch: " + what) {}
};

class NotAUnit : public Error {
 public:
  explicit NotAUnit(const std::string& what) : Error("not a unit: " + what) {}
};

class AlgebraMismatch : public Error {
 public:
  explicit AlgebraMismatch(const std::string& what) : Error("algebra mismatch: " + what) {}
};

class NonFieldRing : public Error {
 public:
  explicit NonFieldRing(const std::string& what) : Error("coefficient ring is not a field: " + what) {}
};

// Raised wherever exact elimination would need division by a zero divisor.
class CompositeModulusUnsupported : public Error {
 public:
  explicit CompositeModulusUnsupported(const std::string& what)
      : Error("composite modulus unsupported: " + what) {}
};

class BadParameterCount : public Error {
 public:
  explicit BadParameterCount(const std::string& what) : Error("bad parameter count: " + what) {}
};

class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(const std::string& what) : Error("precondition failed: " + what) {}
};

class NotATensorAlgebra : public Error {
 public:
  explicit NotATensorAlgebra(const std::string& what) : Error("not a tensor product algebra: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace derivlab
