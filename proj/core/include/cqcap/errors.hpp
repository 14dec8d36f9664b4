#pragma once

#include <stdexcept>
#include <string>

namespace cqcap {

// Invalid or inconsistent input (bad file, mismatched dimensions, violated
// preconditions). CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative optimizer failed to reach its stopping criterion. Carries the
// best iterate found so far. CLI maps this to exit code 3.
struct OptimizerError : std::runtime_error {
    OptimizerError(const std::string& msg, double best_value, double best_gap)
        : std::runtime_error(msg), best_value(best_value), best_gap(best_gap) {}
    double best_value;
    double best_gap;
};

// A configured resource cap (dense dimension, enumeration size) would be
// exceeded. CLI maps this to exit code 4.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense eigensolver did not converge. The message contains a dump of the
// offending matrix.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cqcap
