#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in incompatible spaces, ranks or generator sets.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A product or substitution produced an exponent below a symbol's floor.
class FloorError : public Error {
 public:
  using Error::Error;
};

/// An expansion was requested for an argument that has a weight-zero term.
class NonTruncatableError : public Error {
 public:
  using Error::Error;
};

/// Generator function of a multi-term argument whose terms do not commute.
class UnsupportedArgumentError : public Error {
 public:
  using Error::Error;
};

/// Rewriting exceeded its step budget, or a lazily induced table is cyclic.
class ConfluenceError : public Error {
 public:
  using Error::Error;
};

/// Negative powers of the contraction parameter survive the limit.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::vector<std::string> offending)
      : Error(what), offending_(std::move(offending)) {}

  const std::vector<std::string>& offending() const { return offending_; }

 private:
  std::vector<std::string> offending_;
};

/// Unknown catalog name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Antipode synthesis did not reach a fixed point.
class SynthesisError : public Error {
 public:
  using Error::Error;
};

/// A change of basis whose supplied inverse does not invert it.
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfc
