#pragma once

#include <stdexcept>
#include <string>

namespace zpd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed the configured work cap.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long required, unsigned long long budget)
      : Error(what), required_(required), budget_(budget) {}

  unsigned long long required() const noexcept { return required_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

/// Operation requires a different kind of field (e.g. exhaustive search over Q).
class FieldKindError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Invalid catalog name, parameter, or characteristic constraint.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A user-supplied assumption was contradicted by the data.
class FlagMisuse : public Error {
 public:
  using Error::Error;
};

class MissingLayout : public Error {
 public:
  using Error::Error;
};

}  // namespace zpd
