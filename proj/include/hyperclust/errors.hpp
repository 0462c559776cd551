#pragma once

#include <stdexcept>
#include <string>

namespace hyperclust {

/// Malformed in-memory input: wrong dimensions, non-finite values, broken invariants.
struct InvalidInputError : std::invalid_argument {
    explicit InvalidInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A parameter outside its legal range (k >= N, unknown ablation name, ...).
struct InvalidParameterError : std::invalid_argument {
    explicit InvalidParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// File-level problems: unreadable paths, parse failures, empty datasets.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Degenerate numerical situation: all-identical samples, zero-degree vertex,
/// zero rows where a direction is required.
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unrecoverable numerical failure inside a solver.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hyperclust
