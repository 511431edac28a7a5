#pragma once

#include <stdexcept>
#include <string>

namespace ynoid {

// Mode-recursion walked past the configured cap without the spectrum turning
// definitely positive.  The message carries the tail of the mode table.
struct NonConvergenceError : std::runtime_error {
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Geometry outside what the engine knows how to decompose (e.g. two or more
// kernel faces in one surface).
struct UnsupportedConfigurationError : std::runtime_error {
    explicit UnsupportedConfigurationError(const std::string& what) : std::runtime_error(what) {}
};

// A branch that is mathematically impossible for a well-formed input was
// reached; indicates a bug, not bad data.
struct InternalConsistencyError : std::logic_error {
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ynoid
