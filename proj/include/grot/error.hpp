#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grot {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid scenario or context data (families, degrees, torsion numbers).
class ContextError : public Error {
 public:
  using Error::Error;
};

// A precondition of an operation does not hold (side/basis mismatch,
// unlinked segments, degree mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The decomposition provider has no multiplicity data for a support.
class CoverageError : public Error {
 public:
  using Error::Error;
};

class TransferError : public Error {
 public:
  enum class Kind { DoesNotTransfer, InconsistentDatum, NoInnerForm };

  TransferError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace grot
