#pragma once

#include <stdexcept>
#include <string>

namespace mhsc {

// Base class for every domain error raised by the library. The sweep
// harness turns these into skip records instead of aborting.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertible : public MathError {
 public:
  using MathError::MathError;
};

class NotPAdicInteger : public MathError {
 public:
  using MathError::MathError;
};

class ModulusMismatch : public MathError {
 public:
  using MathError::MathError;
};

class IndexTooLarge : public MathError {
 public:
  using MathError::MathError;
};

class PreconditionViolated : public MathError {
 public:
  using MathError::MathError;
};

class PoleAtX : public MathError {
 public:
  using MathError::MathError;
};

class ResidualPoleAtOne : public MathError {
 public:
  using MathError::MathError;
};

// Malformed user input (rational strings, sweep configuration).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mhsc
