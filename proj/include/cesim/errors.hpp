// Error types shared across the solver components.
#pragma once

#include <stdexcept>
#include <string>

namespace cesim {

/// Malformed or invalid configuration (bad key, bad value, parse failure).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented precondition or data invariant was violated (negative kappa,
/// unfilled ghosts, shape mismatch, ...).
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

/// Time step rejected by a CFL precondition. Carries the largest admissible dt.
class CflError : public std::runtime_error {
public:
    CflError(const std::string& msg, double admissible_dt)
        : std::runtime_error(msg), admissible_dt(admissible_dt) {}
    double admissible_dt;
};

/// Linear solver failed to reach the requested residual.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& msg, double residual, int iterations)
        : std::runtime_error(msg), residual(residual), iterations(iterations) {}
    double residual;
    int iterations;
};

} // namespace cesim
