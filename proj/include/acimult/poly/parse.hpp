#ifndef ACIMULT_POLY_PARSE_HPP
#define ACIMULT_POLY_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "acimult/poly/polynomial.hpp"

namespace acimult::poly {

/// Parse failure; `column()` is 1-based within the parsed text.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownVariable };

  ParseError(Kind kind, std::size_t column, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t column_;
};

/// Integer coefficients, + - * ^, parentheses, and juxtaposition for
/// products ("3x^2y" or "3*x^2*y"). An identifier that is not a variable
/// is split greedily into variable names.
template <class F>
Polynomial<F> parse_poly(const RingPtr<F>& ring, std::string_view text);

/// Canonical text: terms descending, "*" between factors, unit
/// coefficients omitted, prime-field coefficients in symmetric range.
template <class F>
std::string format_poly(const Polynomial<F>& p);

}  // namespace acimult::poly

#endif  // ACIMULT_POLY_PARSE_HPP
