#pragma once

#include <stdexcept>
#include <string>

namespace jtsim {

// Raised when a run configuration is malformed or violates an invariant.
// The command-line front end maps this (and std::invalid_argument) to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a linear solve or spectral computation fails (singular resolvent,
// degenerate stationary kernel, non-convergence). Maps to exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace jtsim
