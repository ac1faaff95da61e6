#pragma once

#include <string>

#include "lucastk/cfrac.hpp"

namespace lucastk::cli {

/// Parses a real-valued expression over
///   numbers (17, 0.3, 2e5), + - * / ^ (integer exponents), parentheses,
///   log(x), sqrt(x) and alpha(r,s), the dominant root of x^2 = r x + s.
/// The result is re-evaluated with interval arithmetic at any precision.
RealFn parse_real(const std::string& text);

/// Integer literal: 123, 10^45 or 1e45.
Int parse_integer_expr(const std::string& text);

}  // namespace lucastk::cli
