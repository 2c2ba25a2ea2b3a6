#pragma once

// Text and JSON formats for ideals and polynomials.
//
// Inline ideals: comma-separated monomials such as "x0^5,x1^5,x2^5,x0^3*x1*x2".
// JSON ideals: {"n": 2, "d": 5, "generators": [[5,0,0], ...]}; "generators"
// may also hold inline monomial strings.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "togliatti/errors.hpp"
#include "togliatti/monomial.hpp"

namespace togliatti {

/// Malformed text with a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses an inline ideal. Without n, the number of variables is one past
/// the largest index that occurs. The degree is read off the generators.
MonomialIdeal parse_inline_ideal(std::string_view text, std::optional<int> n = std::nullopt);

/// One monomial in inline syntax over num_vars variables.
Monomial parse_monomial(std::string_view text, std::size_t num_vars);

MonomialIdeal ideal_from_json(const nlohmann::json& j);
/// Parses JSON text; syntax errors carry the line and column.
MonomialIdeal parse_ideal_json(std::string_view text);
/// Accepts either a JSON document (leading '{') or the inline syntax.
MonomialIdeal parse_ideal(std::string_view text, std::optional<int> n = std::nullopt);

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);

using Polynomial = std::map<std::vector<int>, mpz_class>;

/// Integer polynomial such as "24*x0^4-154*x0^3*x1+3". Exponent vectors have
/// length num_vars; like terms are combined and zero terms dropped.
Polynomial parse_polynomial(std::string_view text, std::size_t num_vars);

}  // namespace togliatti
