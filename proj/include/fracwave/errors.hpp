#pragma once

#include <stdexcept>
#include <string>

namespace fracwave {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series/quadrature could not certify the requested tolerance.
struct NonConvergence : Error {
    double last_partial = 0.0;
    NonConvergence(const std::string& msg, double last)
        : Error(msg + " (last partial-sum magnitude " + std::to_string(last) + ")"),
          last_partial(last) {}
};

struct DomainError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct QuadratureBudget : Error {
    using Error::Error;
};

// A mode whose linear system is (near-)singular; carries the mode index.
struct DegenerateMode : Error {
    int mode = 0;
    DegenerateMode(int n, const std::string& msg)
        : Error("mode n=" + std::to_string(n) + ": " + msg), mode(n) {}
};

// The adopted closed-form reading failed its initial-condition self-check.
struct FormulaReading : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace fracwave
