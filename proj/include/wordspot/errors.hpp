#pragma once

#include <stdexcept>
#include <string>

namespace wordspot {

/// Malformed or unsupported input: files, page specs, query selectors.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Failure while producing output or an inconsistent run-time state.
struct ProcessingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wordspot
