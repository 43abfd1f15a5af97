#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltaring {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Element index outside [0, size).
class RangeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "range"; }
};

// Ring would exceed the element cap (see capacity()).
class CapacityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "capacity"; }
};

// Tables are malformed: wrong dimensions, entries out of range, zero == one.
// Distinct from an axiom failure, which validate_ring() reports as data.
class StructuralError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "structure"; }
};

// Construction parameters rejected (s not central, e not idempotent, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "construction"; }
};

class ParseError : public Error {
 public:
  ParseError(std::string const& msg, std::size_t column)
      : Error("column " + std::to_string(column) + ": " + msg),
        _column(column) {}
  const char* kind() const noexcept override { return "parse"; }
  std::size_t column() const noexcept { return _column; }

 private:
  std::size_t _column;
};

}  // namespace deltaring
