#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ochar {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an expression or label fails to parse; `pos` is the byte
/// offset of the offending character in the input.
struct ParseError : Error {
    ParseError(std::size_t pos_, const std::string& msg)
        : Error(msg + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
    std::size_t pos;
};

/// A claimed character evaluated to a negative multiplicity. Signals a
/// non-character input or a convention bug; never clamped.
struct NonCharacterError : Error {
    using Error::Error;
};

/// Greedy decomposition hit a negative residual coefficient.
struct NegativeResidualError : Error {
    using Error::Error;
};

/// A generator weight multiset does not split into Levi-simple blocks.
struct RegroupError : Error {
    using Error::Error;
};

struct UnsupportedError : Error {
    using Error::Error;
};

}  // namespace ochar
