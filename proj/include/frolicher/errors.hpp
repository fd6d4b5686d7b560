#pragma once

#include <stdexcept>
#include <string>

namespace frolicher {

// Error kinds surfaced by the library.  The CLI maps each to a message and
// exit code; tests match on the concrete type.

struct ConfigurationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structure constants that violate d^2 = 0 or the bidegree split.
struct ModelInvalidError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MetricError : std::runtime_error {
    MetricError(const std::string &what, double smallest_eigenvalue)
        : std::runtime_error(what), smallest(smallest_eigenvalue) {}
    double smallest;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagree.
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace frolicher
