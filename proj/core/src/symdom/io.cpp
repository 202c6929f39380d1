#include "rigidity/symdom/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rigidity::symdom {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("symdom JSON: ") + e.what());
  }
}

Rational exact_number(const json& x) {
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) return Rational(x.get<long long>());
  throw ParseError("coefficients must be strings or integers, got " + x.dump());
}

ExactPolynomial coefficient_list(const json& list) {
  if (!list.is_array()) throw ParseError("expected a coefficient list, got " + list.dump());
  std::vector<ComplexRational> c;
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("coefficient must be [re, im], got " + pair.dump());
    }
    c.emplace_back(exact_number(pair[0]), exact_number(pair[1]));
  }
  return ExactPolynomial(std::move(c));
}

PolynomialMatrixPath path_from(const json& doc) {
  if (!doc.is_array() || doc.empty()) throw ParseError("path must be a non-empty array of rows");
  std::vector<std::vector<ExactPolynomial>> rows;
  for (const auto& row : doc) {
    if (!row.is_array() || row.empty()) throw ParseError("path rows must be non-empty arrays");
    std::vector<ExactPolynomial> entries;
    for (const auto& entry : row) entries.push_back(coefficient_list(entry));
    rows.push_back(std::move(entries));
  }
  try {
    return PolynomialMatrixPath(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

BivariatePolynomial bivariate_from(const json& doc) {
  if (!doc.is_object() || !doc.contains("lambda_coefficients")) {
    throw ParseError("polynomial needs key \"lambda_coefficients\"");
  }
  const auto& list = doc.at("lambda_coefficients");
  if (!list.is_array()) throw ParseError("\"lambda_coefficients\" must be an array");
  std::vector<ExactPolynomial> by_lambda;
  for (const auto& c : list) by_lambda.push_back(coefficient_list(c));
  try {
    return BivariatePolynomial(std::move(by_lambda));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

PolynomialMatrixPath parse_path(std::string_view json_text) {
  return path_from(parse_json(json_text));
}

BivariatePolynomial parse_bivariate(std::string_view json_text) {
  return bivariate_from(parse_json(json_text));
}

SymdomInput parse_symdom_input(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (doc.is_array()) return path_from(doc);
  return bivariate_from(doc);
}

SymdomInput read_symdom_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_symdom_input(buffer.str());
}

}  // namespace rigidity::symdom
