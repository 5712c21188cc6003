#pragma once

#include <stdexcept>
#include <string>

namespace qtb {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad inputs: violated type invariants, malformed configuration.
struct InvalidParameter : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Numerical failures.
struct NumericalError : Error {
    using Error::Error;
};

struct NegativeKineticEnergy : NumericalError {
    explicit NegativeKineticEnergy(double energy_ev)
        : NumericalError("kinetic energy below source band edge: E = " +
                         std::to_string(energy_ev) + " eV"),
          energy_ev(energy_ev) {}
    double energy_ev;
};

struct EvanescentDrain : NumericalError {
    EvanescentDrain(double energy_ev, double bias_ev)
        : NumericalError("drain state is evanescent: E + V0 = " +
                         std::to_string(energy_ev + bias_ev) + " eV"),
          energy_ev(energy_ev), bias_ev(bias_ev) {}
    double energy_ev;
    double bias_ev;
};

struct SqrtDomain : NumericalError {
    explicit SqrtDomain(double value)
        : NumericalError("sqrt of negative value " + std::to_string(value)),
          value(value) {}
    double value;
};

struct DivisionByZero : NumericalError {
    DivisionByZero() : NumericalError("division by zero") {}
};

struct SingularPivot : NumericalError {
    explicit SingularPivot(std::size_t index)
        : NumericalError("tridiagonal elimination hit a near-zero pivot at row " +
                         std::to_string(index)),
          index(index) {}
    std::size_t index;
};

struct ResidualTooLarge : NumericalError {
    ResidualTooLarge(double residual, double bound)
        : NumericalError("linear-solve residual " + std::to_string(residual) +
                         " exceeds bound " + std::to_string(bound)),
          residual(residual), bound(bound) {}
    double residual;
    double bound;
};

struct NonFiniteLoss : NumericalError {
    explicit NonFiniteLoss(int iteration)
        : NumericalError("loss became non-finite at iteration " +
                         std::to_string(iteration)),
          iteration(iteration) {}
    int iteration;
};

struct AllStartsFailed : NumericalError {
    AllStartsFailed() : NumericalError("every optimization start aborted") {}
};

struct BackendUnavailable : Error {
    explicit BackendUnavailable(const std::string& name)
        : Error("tangent backend not available on this machine/build: " + name) {}
};

}  // namespace qtb
