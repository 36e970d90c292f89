#pragma once

#include <stdexcept>
#include <string>

namespace pao {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidHyperparams : public Error {
public:
    using Error::Error;
};

/// Raised when a numerical routine produces an impossible result, e.g. a
/// singular block in the matrix fraction decomposition.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

class DegenerateCovariance : public Error {
public:
    using Error::Error;
};

class InsufficientPopulation : public Error {
public:
    using Error::Error;
};

class ObjectiveEvaluationFailure : public Error {
public:
    using Error::Error;
};

class UnknownProblem : public Error {
public:
    using Error::Error;
};

class InvalidDimension : public Error {
public:
    using Error::Error;
};

class MismatchedHorizons : public Error {
public:
    using Error::Error;
};

class IoFailure : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

}  // namespace pao
