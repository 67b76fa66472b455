#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace regrank {

// Bad arguments, malformed config, violated preconditions.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Filesystem failures (missing file, unwritable path).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed content in an otherwise readable file.
struct ParseError : std::runtime_error {
    ParseError(const std::string& path, int line, const std::string& message)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
          line(line) {}
    int line;
};

// The empirical chain has no unique stationary distribution.
struct NotErgodicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Power iteration hit its cap; carries the last iterate and residual.
struct MaxIterationsError : std::runtime_error {
    MaxIterationsError(std::vector<double> iterate, double residual, int iterations)
        : std::runtime_error("power iteration did not converge after " +
                             std::to_string(iterations) +
                             " iterations (residual " + std::to_string(residual) + ")"),
          last_iterate(std::move(iterate)),
          residual(residual),
          iterations(iterations) {}
    std::vector<double> last_iterate;
    double residual;
    int iterations;
};

// Constant input vector; tie-corrected rank correlation is undefined.
struct DegenerateInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A closed-form bound was queried outside the hypothesis of its statement.
struct HypothesisViolatedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace regrank
