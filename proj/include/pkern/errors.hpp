#pragma once

#include <stdexcept>
#include <string>

namespace pkern {

// All library errors derive from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (matrix files, PDP strings, bad row lengths).
struct ParseError : Error {
    using Error::Error;
};

// A code constructor was given dependent rows or inconsistent dimensions.
struct InvalidCode : Error {
    using Error::Error;
};

// An operation requires a square matrix.
struct NotSquare : Error {
    using Error::Error;
};

// Phase index outside [0, l).
struct PhaseOutOfRange : Error {
    using Error::Error;
};

// A requested distance is outside [0, n].
struct DistanceOutOfRange : Error {
    using Error::Error;
};

// Enumeration over 2^k codewords was requested for k beyond the guard.
struct DimensionTooLarge : Error {
    using Error::Error;
};

// A coset-leader table over 2^r syndromes was requested for r beyond the guard.
struct RedundancyTooLarge : Error {
    using Error::Error;
};

// refine_to_supercode was called with a code that does not contain the base.
struct NotASupercode : Error {
    using Error::Error;
};

// MacWilliams transform of a non-distribution produced a fractional count.
struct NonIntegerResult : Error {
    using Error::Error;
};

// Exact integer arithmetic would overflow the chosen word size.
struct Overflow : Error {
    using Error::Error;
};

// LP solver hit its pivot cap before reaching a verdict.
struct SolverBudgetExceeded : Error {
    using Error::Error;
};

// Fixture file missing, malformed, or failing its checksum.
struct FixtureError : Error {
    using Error::Error;
};

}  // namespace pkern
