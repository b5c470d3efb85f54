#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace e1dirac {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Zero denominator or otherwise ill-formed rational function.
struct malformed_scalar : error {
    using error::error;
};

/// Operands live on charts of different dimension.
struct chart_mismatch : error {
    using error::error;
};

/// Degree or index precondition violated (out-of-range coordinate, wrong tensor degree).
struct degree_error : error {
    using error::error;
};

/// Expression or manifest syntax error; `position` is a 0-based offset into the input.
struct parse_error : error {
    std::size_t position;
    parse_error(std::size_t pos, const std::string& msg)
        : error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace e1dirac
