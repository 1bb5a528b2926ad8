#pragma once

#include <stdexcept>
#include <string>

namespace c2r {

/// Invalid configuration or parameter value; message names the offending field.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure inside a solver (nonphysical state, dt underflow, ...).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& msg, int cell = -1)
        : std::runtime_error(msg), cell_index(cell) {}
    int cell_index;
};

/// Training diverged (NaN loss etc.); carries the epoch where it happened.
class TrainingError : public std::runtime_error {
public:
    explicit TrainingError(const std::string& msg, int epoch = -1)
        : std::runtime_error(msg), epoch_index(epoch) {}
    int epoch_index;
};

/// A required artifact (checkpoint, field file) is missing.
class PrereqError : public std::runtime_error {
public:
    explicit PrereqError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File format / IO failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace c2r
