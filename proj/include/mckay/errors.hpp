#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& m) : Error(m) {}
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& m) : Error(m) {}
};

struct GroupMismatch : Error {
  GroupMismatch() : Error("operands belong to different groups") {}
};

struct SieveStalled : Error {
  explicit SieveStalled(const std::string& m) : Error(m) {}
};

struct NonIntegralDecomposition : Error {
  explicit NonIntegralDecomposition(const std::string& m) : Error(m) {}
};

struct UnsupportedGroup : Error {
  explicit UnsupportedGroup(const std::string& m) : Error(m) {}
};

struct DegenerateCone : Error {
  explicit DegenerateCone(const std::string& m) : Error(m) {}
};

struct FanInconsistent : Error {
  explicit FanInconsistent(const std::string& m) : Error(m) {}
};

struct UnsupportedSupport : Error {
  explicit UnsupportedSupport(const std::string& m) : Error(m) {}
};

struct UnsupportedDimension : Error {
  explicit UnsupportedDimension(const std::string& m) : Error(m) {}
};

struct UnsupportedFixedLoci : Error {
  explicit UnsupportedFixedLoci(const std::string& m) : Error(m) {}
};

struct NotAffine : Error {
  explicit NotAffine(const std::string& m) : Error(m) {}
};

// Raised when an internal consistency cross-check fails; indicates a bug,
// never a bad input.
struct InternalCheckFailed : Error {
  explicit InternalCheckFailed(const std::string& m) : Error(m) {}
};

}  // namespace mckay
