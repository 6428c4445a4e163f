#pragma once

#include <stdexcept>
#include <string>

namespace loopmc {

// Error taxonomy shared across the library.  Exit-code mapping lives in the
// CLI driver (config -> 1, low effective samples -> 2, io -> 3, cap -> 4).

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter value outside its admissible range (Q < 1, Delta < 1, L < 1, ...).
struct OutOfRange : ConfigError {
  using ConfigError::ConfigError;
};

// Mutually inconsistent parameter set (e.g. Q and Delta both given but
// sqrt(Q) != 2*Delta beyond tolerance).
struct Inconsistent : ConfigError {
  using ConfigError::ConfigError;
};

// Operation requested for a parameter point where it is undefined
// (e.g. orientation observables at Q = 1 where lambda does not exist).
struct NotApplicable : ConfigError {
  using ConfigError::ConfigError;
};

// Hilbert-space dimension would exceed the configured cap.
struct DimensionCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// compare: no common (parameter point, observable) keys between the inputs.
struct KeyMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Correlation-length fit fed with unusable data.
struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Height evaluation along a path that cannot avoid a rung.
struct PathBlocked : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace loopmc
