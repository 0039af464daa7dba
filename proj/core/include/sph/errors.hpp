#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sph {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector or matrix sizes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation (e.g. a vector that
/// is not in the lattice it is supposed to belong to).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rational character is not a combination of simple roots.
class NotInRootSpanError : public DomainError {
 public:
  NotInRootSpanError() : DomainError("not in root span") {}
};

/// The valuation cone handed to a spherical-root computation has more or
/// fewer facets than its codimension allows.
class NotCosimplicialError : public DomainError {
 public:
  NotCosimplicialError() : DomainError("valuation cone is not cosimplicial") {}
};

/// Two data over different groups were compared.
class IncomparableError : public DomainError {
 public:
  IncomparableError() : DomainError("incomparable: data live over different groups") {}
};

/// A finite quotient would have to decide how the automorphism group acts
/// on colors that carry identical invariants without forming a type-b pair.
class AmbiguousColorActionError : public DomainError {
 public:
  explicit AmbiguousColorActionError(const std::string& what)
      : DomainError("ambiguous color action: " + what) {}
};

/// One violated axiom of a spherical datum.
struct Violation {
  std::string tag;  // "V1".."V5" or "QA"
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// A datum failed validation where a valid one was required.
class InvalidDatumError : public Error {
 public:
  InvalidDatumError(std::string context, std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }
  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
  std::vector<Violation> violations_;
};

/// Malformed input file; `where` names the JSON field or line.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& message)
      : Error(where + ": " + message), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace sph
