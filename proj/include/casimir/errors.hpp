#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside an operation's domain (non-positive separation, x <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An integrand returned NaN (or another non-finite value) at an interior point.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive subdivision budget exhausted before the tolerance was met.
/// Carries the best estimate obtained so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_value, double best_error)
        : std::runtime_error(what), value(best_value), error_estimate(best_error) {}

    double value;
    double error_estimate;
};

/// Failure writing an output artifact (CSV, SVG).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace casimir
