#ifndef TRGEO_ERRORS_HPP
#define TRGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trgeo {

// Base class for everything this library throws. `exit_code` matches the
// CLI contract: 2 for input/precondition violations, 3 for numerical
// failures discovered while computing.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual int exit_code() const noexcept { return 2; }
};

class NumericalError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class UnorientedError : public Error {
public:
    using Error::Error;
};

class NotUnitaryError : public Error {
public:
    using Error::Error;
};

class TooCloseToCurveError : public Error {
public:
    using Error::Error;
};

class LoopCrossesCurveError : public Error {
public:
    using Error::Error;
};

class EmptySurfaceError : public Error {
public:
    using Error::Error;
};

class EmptyCellError : public Error {
public:
    using Error::Error;
};

class DegenerateSubspaceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class PhaseUndefinedError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class EvaluationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonIntegerResidualError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace trgeo

#endif
