#pragma once

#include <stdexcept>
#include <string>

namespace spindefect {

// Invalid physical parameters or arguments outside an operation's domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A run configuration that cannot produce trustworthy output, e.g. a ring
// too small for the requested simulation window.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation exactly at a band edge, where the lattice Green function diverges.
class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Evaluation at the bound-state pole of the full Green function.
class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Bound-state quantity requested for a vanishing defect.
class NoBoundStateError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

}  // namespace spindefect
