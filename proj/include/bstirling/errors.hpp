#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bstirling {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input-validation errors: the caller's text or parameters are malformed.
/// The CLI maps these to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Domain errors: the values are well-formed but mathematically out of range
/// for the requested operation.  The CLI maps these to exit code 1.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed series expression text.  `offset` is the 1-based byte offset of
/// the offending token (for end-of-input, one past the last byte).
class SyntaxError : public UsageError {
public:
    SyntaxError(std::size_t offset, const std::string& token, const std::string& detail)
        : UsageError("syntax error at byte offset " + std::to_string(offset) + " near '" +
                     token + "': " + detail),
          offset_(offset),
          token_(token) {}
    std::size_t offset() const { return offset_; }
    const std::string& token() const { return token_; }

private:
    std::size_t offset_;
    std::string token_;
};

/// Series-expression atom names a family the catalog does not know.
class UnknownName : public UsageError {
public:
    explicit UnknownName(const std::string& name, std::size_t offset = 0)
        : UsageError(offset == 0 ? "unknown series family '" + name + "'"
                                 : "unknown series family '" + name + "' at byte offset " +
                                       std::to_string(offset)),
          name_(name),
          offset_(offset) {}
    const std::string& name() const { return name_; }
    std::size_t offset() const { return offset_; }

private:
    std::string name_;
    std::size_t offset_;
};

/// Wrong number or kind of parameters for a catalog family.
class BadArity : public UsageError {
public:
    explicit BadArity(const std::string& detail, std::size_t offset = 0)
        : UsageError(offset == 0
                         ? detail
                         : detail + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A family parameterized by lambda was asked for lambda = 0.
class ZeroLambda : public UsageError {
public:
    explicit ZeroLambda(const std::string& family)
        : UsageError("family '" + family + "' requires lambda != 0") {}
};

/// A probability distribution is malformed (weights missing, negative, or
/// not summing to one).
class BadDistribution : public UsageError {
public:
    using UsageError::UsageError;
};

/// The series does not have constant term 1.
class NotInClassB : public DomainError {
public:
    using DomainError::DomainError;
};

/// An inner series for substitution has nonzero constant term.
class NonzeroConstantTerm : public DomainError {
public:
    using DomainError::DomainError;
};

/// A computation needs more coefficients than the series carries.
class OrderTooSmall : public DomainError {
public:
    using DomainError::DomainError;
};

/// A triangle of the wrong kind was supplied.
class KindMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

/// Two objects that must agree in size do not.
class SizeMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

/// Out-of-range index pair (n, k) for a triangle or coefficient access.
class BadIndices : public DomainError {
public:
    using DomainError::DomainError;
};

/// An exhaustive enumeration was requested beyond its guarded size.
class TooLarge : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace bstirling
