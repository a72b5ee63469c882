#pragma once

#include <stdexcept>
#include <string>

namespace confract {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

/// Group parameter pushes the flow outside the chart 1 + alpha*eps*t^alpha > 0.
class ChartExitError : public Error {
public:
    using Error::Error;
};

/// kappa, X_x or det F vanishes at the requested point.
class SingularityError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Bad configuration, raised by the config loader and the CLI layer.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace confract
