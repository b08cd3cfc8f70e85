#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed files or inconsistent records.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised in strict mode when some node was never blocked.
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cascade
