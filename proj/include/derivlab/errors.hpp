#pragma once

#include <stdexcept>
#include <string>

namespace derivlab {

struct ring_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct dimension_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_algebra_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised by the expression parser; `position` is a 0-based byte offset
/// into the input text.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Raised by the truncated free-algebra module when a product would leave
/// the representable range. Never silently truncates.
struct truncation_overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace derivlab
