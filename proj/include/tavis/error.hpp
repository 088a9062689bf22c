#pragma once

#include <stdexcept>
#include <string>

namespace tavis {

// Base of every error raised by the library. The CLI maps subclasses to
// process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Initial state has weight on excitation blocks cut by the Fock truncation,
// or a requested field state needs more photons than fock_dim holds.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class DimensionCapError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid scenario configuration; `field()` names the offending entry.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace tavis
