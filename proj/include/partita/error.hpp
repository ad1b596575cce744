#pragma once

#include <stdexcept>
#include <string>

namespace partita {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid arguments to a builder or an operation (bad congruence, missing
// prime factor, improper kernel, ...).
struct ParameterError : Error {
  using Error::Error;
};

// A constructed object failed a structural check (Cayley table invariants,
// action homomorphism, quotient normality, induced-table closure).
struct ConstructionError : Error {
  using Error::Error;
};

// Group or lattice size beyond the configured cap.
struct SizeError : Error {
  using Error::Error;
};

// Malformed corpus manifest.
struct ManifestError : Error {
  using Error::Error;
};

// A certificate failed re-validation where a valid one was required.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace partita
