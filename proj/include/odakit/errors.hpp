#pragma once

#include <stdexcept>
#include <string>

namespace odakit {

// Malformed or inconsistent input: bad JSON shape, relations out of range,
// a leq table that is not a partial order, arity mismatches, and so on.
// The CLI maps this to exit code 3.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or closure would exceed a configured guard.
// The CLI maps this to exit code 2.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A verified-by-construction property failed.  These indicate a bug (or a
// refuted theorem), never bad user input.  The CLI maps this to exit code 1.
struct check_failure : std::logic_error {
    explicit check_failure(const std::string& what) : std::logic_error(what) {}
};

} // namespace odakit
