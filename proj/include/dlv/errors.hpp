#pragma once

#include <stdexcept>
#include <string>

namespace dlv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point or argument lies outside the domain of a formula.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument at or too close to a pole of the Weierstrass function.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Series or recursion did not reach the requested accuracy.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// Parameters violate a documented restriction (bad case row, side condition, schema).
class ParameterError : public Error {
public:
    using Error::Error;
};

class IntegrationError : public Error {
public:
    using Error::Error;
};

class SamplingError : public Error {
public:
    using Error::Error;
};

/// Numerical instability or an invalid solver configuration.
class SolverError : public Error {
public:
    using Error::Error;
};

} // namespace dlv
