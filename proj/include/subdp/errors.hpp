#pragma once

#include <stdexcept>
#include <string>

namespace subdp {

// Malformed caller input: bad files, out-of-range ids, domain mismatches.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation declined by a size guard; caller should take the approximate path.
struct refusal_error : std::runtime_error {
    explicit refusal_error(const std::string& what) : std::runtime_error(what) {}
};

// A constructed table broke one of its own invariants; signals a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace subdp
