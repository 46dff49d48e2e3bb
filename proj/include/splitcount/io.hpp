#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "splitcount/integer_matrix.hpp"
#include "splitcount/poly.hpp"

namespace splitcount::io {

/// Matrix text format: first line n, then n lines of n decimal integers.
/// Lines starting with '#' are ignored. Throws ParseError.
IntegerMatrix parse_matrix(std::string_view text);
IntegerMatrix read_matrix_file(const std::string &path);
std::string format_matrix(const IntegerMatrix &m);

/// Accepts products of "(x-1)^a" and "(x+1)^b" in either order, exponent 1
/// optional. Throws ParseError, OddB, or DimensionMismatch when `n` is
/// given and a + b != n.
SplitPolySpec parse_poly(std::string_view text, std::optional<int> n = {});

/// The same multiplicities written as "a,b".
SplitPolySpec parse_split(std::string_view text, std::optional<int> n = {});

} // namespace splitcount::io
