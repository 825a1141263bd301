#pragma once

#include <stdexcept>
#include <string>

namespace radlab {

// Contract violations surface as exceptions; batch drivers catch per item.

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeEigenvalue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlphaOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad input files, unknown bound ids, out-of-range ensemble parameters.
struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace radlab
