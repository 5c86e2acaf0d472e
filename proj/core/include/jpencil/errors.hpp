#pragma once

#include <stdexcept>
#include <string>

namespace jpencil {

/// Base class for all library errors. The CLI maps error kinds onto its
/// exit-status contract, so every throw site uses one of the subclasses.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual const char* kind() const noexcept { return "error"; }
};

class DivisionByZero : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "division_by_zero"; }
};

/// Arithmetic between quadratic-field elements over different radicands.
class FieldMismatch : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "field_mismatch"; }
};

class ParseError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse_error"; }
};

class ConfigError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "config_error"; }
};

/// A coefficient sequence was asked for an index it cannot produce.
class SequenceExhausted : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "sequence_exhausted"; }
};

/// A vector operation would need operator columns beyond the truncation.
class TruncationOverflow : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "truncation_overflow"; }
};

class DomainError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain_error"; }
};

/// Root finding refuses degrees where float coefficients are unreliable.
class DegreeLimit : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "degree_limit"; }
};

class InternalError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal_error"; }
};

}  // namespace jpencil
