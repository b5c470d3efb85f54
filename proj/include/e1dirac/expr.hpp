#pragma once

/// Recursive-descent parser for coefficient expressions: rational literals,
/// coordinate names, + - * / ^ with nonnegative integer exponents, and
/// parentheses. No function symbols; encode d ln|f| as the explicit rational
/// 1-form df/f.

#include <e1dirac/scalar.hpp>

#include <vector>

namespace e1dirac {

/// Parses `text` over the chart named by `coords`. Throws parse_error with
/// the offending offset on syntax errors, unknown variables, and division by
/// (an expression normalizing to) zero.
Scalar parse_expression(const std::string& text, const std::vector<std::string>& coords);

} // namespace e1dirac
