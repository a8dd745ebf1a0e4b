#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace alglength {

/// Base of every error raised by the library. kind() is a stable,
/// greppable class name ("DivisionByZero", "ShapeError", ...).
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string &message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string &kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define ALGLENGTH_DEFINE_ERROR(Name, Base)                                     \
  class Name : public Base {                                                   \
  public:                                                                      \
    explicit Name(const std::string &message) : Base(#Name, message) {}        \
                                                                               \
  protected:                                                                   \
    Name(std::string kind, const std::string &message)                         \
        : Base(std::move(kind), message) {}                                    \
  };

ALGLENGTH_DEFINE_ERROR(DivisionByZero, Error)
ALGLENGTH_DEFINE_ERROR(FieldMismatch, Error)
ALGLENGTH_DEFINE_ERROR(FieldError, Error)
ALGLENGTH_DEFINE_ERROR(ShapeError, Error)
ALGLENGTH_DEFINE_ERROR(NonUnital, Error)
ALGLENGTH_DEFINE_ERROR(PrimeFieldNotAllowed, Error)
ALGLENGTH_DEFINE_ERROR(PrimeFieldRequired, Error)
ALGLENGTH_DEFINE_ERROR(PreconditionError, Error)
ALGLENGTH_DEFINE_ERROR(RangeError, Error)
ALGLENGTH_DEFINE_ERROR(WellformednessError, Error)
ALGLENGTH_DEFINE_ERROR(KOutOfRange, Error)
ALGLENGTH_DEFINE_ERROR(NoGeneratingSet, Error)
ALGLENGTH_DEFINE_ERROR(NotGenerating, Error)
ALGLENGTH_DEFINE_ERROR(InternalError, Error)

#undef ALGLENGTH_DEFINE_ERROR

/// Raised when an enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(const std::string &what, std::string count)
      : Error("BudgetExceeded", what + " (candidate count " + count + ")"),
        count_(std::move(count)) {}

  /// Decimal rendering of the computed candidate count.
  const std::string &count() const noexcept { return count_; }

private:
  std::string count_;
};

/// Errors raised while reading algebra files or generating-set arguments.
/// line() is 1-based when the error is tied to a line of a file.
class ParseError : public Error {
public:
  ParseError(std::string kind, const std::string &message,
             std::optional<std::size_t> line = std::nullopt)
      : Error(std::move(kind), line ? "line " + std::to_string(*line) + ": " +
                                          message
                                    : message),
        line_(line) {}

  std::optional<std::size_t> line() const noexcept { return line_; }

private:
  std::optional<std::size_t> line_;
};

#define ALGLENGTH_DEFINE_PARSE_ERROR(Name)                                     \
  class Name : public ParseError {                                             \
  public:                                                                      \
    explicit Name(const std::string &message,                                  \
                  std::optional<std::size_t> line = std::nullopt)              \
        : ParseError(#Name, message, line) {}                                  \
  };

ALGLENGTH_DEFINE_PARSE_ERROR(SyntaxError)
ALGLENGTH_DEFINE_PARSE_ERROR(DuplicateProduct)
ALGLENGTH_DEFINE_PARSE_ERROR(UnitProduct)
ALGLENGTH_DEFINE_PARSE_ERROR(UnknownBasisName)
ALGLENGTH_DEFINE_PARSE_ERROR(BadScalar)
ALGLENGTH_DEFINE_PARSE_ERROR(LcClaimFalse)

#undef ALGLENGTH_DEFINE_PARSE_ERROR

} // namespace alglength
