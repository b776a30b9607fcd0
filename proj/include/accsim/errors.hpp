#pragma once

#include <stdexcept>
#include <string>

namespace accsim {

// Bad user input: config values out of range, malformed JSON, invalid indices.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A delivery run left some F-AP short of its requested file at its deadline.
// The scheme guarantees this never happens; if it fires, the engine is wrong.
struct FeasibilityError : std::runtime_error {
    explicit FeasibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Always-on runtime check. The engine's consistency checks must hold in release
// builds too, so this does not compile away like assert().
#define ACCSIM_CHECK(cond, msg)                                              \
    do {                                                                     \
        if (!(cond)) {                                                       \
            throw ::accsim::InternalError(std::string(msg) + " (" #cond ")"); \
        }                                                                    \
    } while (0)

}  // namespace accsim
