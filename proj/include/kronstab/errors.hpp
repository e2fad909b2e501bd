#pragma once

#include <stdexcept>
#include <string>

namespace kronstab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `column` is 1-based and 0 when unknown.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t column = 0)
        : Error(column ? what + " (column " + std::to_string(column) + ")" : what), message_(what), column_(column) {}
    std::size_t column() const noexcept { return column_; }

    /// The same error for text embedded `offset` characters further right.
    ParseError shifted(std::size_t offset) const { return {message_, column_ ? column_ + offset : 0}; }

  private:
    std::string message_;
    std::size_t column_;
};

/// Arguments outside an operation's domain (size mismatch, index 0, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// An exact computation produced something that must not happen
/// (a non-integral class sum, a negative multiplicity).
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

/// Request exceeds the sizes this toolkit is meant to handle.
class LimitError : public Error {
  public:
    using Error::Error;
};

/// A bound formula cannot be applied to the triple (lengths < 2).
class DegenerateTriple : public Error {
  public:
    using Error::Error;
};

/// A weight scenario cannot be realised (pinned weight not available, ...).
class ScenarioError : public Error {
  public:
    using Error::Error;
};

/// A certified bound was contradicted by the computed sequence.
class CertificateViolation : public Error {
  public:
    using Error::Error;
};

} // namespace kronstab
