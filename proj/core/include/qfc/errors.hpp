#pragma once

#include <stdexcept>
#include <string>

namespace qfc {

// Error taxonomy shared across the library. The CLI maps these to stable
// exit codes, so new failure modes should reuse one of the types below
// rather than raw std exceptions.

/// An operation was called outside its contract (non-normal operator,
/// dimension mismatch, invalid basis, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to reach its accuracy target.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix violates a structural symmetry it was required to have
/// (e.g. the block symmetry of an embedded complex matrix).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A function value left the slice it was declared to stay in.
struct SliceError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Malformed input file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed function description string.
struct DslError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qfc
