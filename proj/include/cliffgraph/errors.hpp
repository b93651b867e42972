#pragma once

#include <stdexcept>
#include <string>

namespace cliff {

// Malformed external input: cycle strings, catalog entries, selectors.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured bound was exceeded (group order, subgroup count).
struct size_error : std::runtime_error {
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A class function claimed to be a character fails to decompose with
// non-negative integer multiplicities.
struct decomposition_error : std::runtime_error {
    explicit decomposition_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed (orthogonality, Clifford uniqueness, ...).
// Always a bug; never silently ignored.
struct consistency_error : std::logic_error {
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cliff
