#pragma once

#include <stdexcept>
#include <string>

namespace bcs {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameters or domain violations (bad prime, k out of range, ...).
struct ParameterError : Error {
    using Error::Error;
};

// A value fell outside its admissible range (tuple entry, residue, index).
struct RangeError : ParameterError {
    using ParameterError::ParameterError;
};

// The requested row size is excluded by the general-row-size construction.
struct NotCoveredError : ParameterError {
    using ParameterError::ParameterError;
};

// A matrix violates the block structure (zero or multiple ones in a block,
// ragged column weight, ...).
struct MalformedMatrixError : Error {
    using Error::Error;
};

// An operation would produce (or an input contains) repeated columns.
// A sensing matrix with repeated columns has coherence 1, so this is
// rejected rather than silently accepted.
struct DuplicateColumnError : Error {
    using Error::Error;
};

// A metric is undefined for the given input (e.g. pairwise overlap of a
// single-column matrix).
struct UndefinedMetricError : Error {
    using Error::Error;
};

// The least-squares subproblem in sparse recovery became rank deficient.
struct NumericalDegeneracyError : Error {
    using Error::Error;
};

// A matrix file or its metadata sidecar could not be parsed or is
// inconsistent with the payload.
struct ParseError : Error {
    using Error::Error;
};

// Re-verification of declared file metadata failed.
struct VerificationError : Error {
    using Error::Error;
};

} // namespace bcs
