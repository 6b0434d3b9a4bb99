#pragma once

#include <stdexcept>
#include <string>

namespace fmd {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input fails a structural precondition (dimensions, ranges, ordering).
class ValidationError : public Error {
public:
    using Error::Error;
};

class InvalidAssertionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidPredictiveError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidMassError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A mass with a zero component where the standard case requires
// strict positivity.
class DegenerateCaseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Smooth completion cannot be made nondecreasing.
class NonMonotoneCompletionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// (q0, q1) outside the admissible region of the all-frequency-mimicking
// family.
class BoundViolationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Requested one-step extension point lies outside the admissible band.
class NotExtendibleError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidExtensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Conditional-probability triple violates the one-step reduction identity.
class NonCoherentTripleError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptyWindowError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnsupportedParametersError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A numerical routine could not reach its accuracy target.
class PrecisionError : public Error {
public:
    using Error::Error;
};

} // namespace fmd
