#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "rigidity/symdom/bivariate.hpp"
#include "rigidity/symdom/matrix_path.hpp"

namespace rigidity::symdom {

// A polynomial path is a JSON array of rows; each entry is a list of
// coefficients in ascending powers of t, each coefficient a pair
// [re, im] of exact decimal or "p/q" strings (integers also accepted).
//
// A bivariate polynomial is an object
//   { "lambda_coefficients": [ <coefficients of lambda^0 in t>, ... ] }
// with the same coefficient-list encoding.
using SymdomInput = std::variant<PolynomialMatrixPath, BivariatePolynomial>;

PolynomialMatrixPath parse_path(std::string_view json_text);
BivariatePolynomial parse_bivariate(std::string_view json_text);
// Array -> path, object -> bivariate polynomial. Throws ParseError.
SymdomInput parse_symdom_input(std::string_view json_text);
SymdomInput read_symdom_input(const std::filesystem::path& path);

}  // namespace rigidity::symdom
