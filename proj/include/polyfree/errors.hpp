#pragma once

#include <stdexcept>

namespace polyfree {

// Bad user input: malformed files, unknown vertices, invalid sets.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded (exact solvers, enumerations).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace polyfree
