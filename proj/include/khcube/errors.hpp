#pragma once

#include <stdexcept>

namespace khcube {

// Input or diagram validation failure (CLI exit code 2).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A resource guard tripped before an exponential blowup (CLI exit code 3).
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant, e.g. d^2 != 0 (CLI exit code 1).
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller violated an operation contract (mismatched shapes and the like).
struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace khcube
