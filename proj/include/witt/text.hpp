#ifndef WITT_TEXT_HPP
#define WITT_TEXT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "witt/laurent.hpp"

namespace witt {

namespace text {

/// One symbolic factor such as t^-2, e_3^2 or d.
struct Factor {
  char symbol;
  bool has_index = false;
  int index = 0;
  int exponent = 1;
  std::size_t pos = 0;
};

/// coefficient * f_1 * f_2 * ..., factors kept in written order.
struct Term {
  Rational coeff{1};
  std::vector<Factor> factors;
  std::size_t pos = 0;
};

/// Parses "term (+|-) term ...", where a term is a '*'-separated product of
/// rationals and symbols from `symbols`. Symbols listed in `indexed` must
/// carry a subscript (e_3, e_-1). Throws ParseError with the offending token.
std::vector<Term> parse_sum(std::string_view s, std::string_view symbols, std::string_view indexed = "");

/// Joins (coefficient, monomial) pairs as "a*m1 - b*m2 + c"; an empty monomial
/// is a constant.
std::string format_sum(const std::vector<std::pair<Rational, std::string>>& terms);

std::string power_string(std::string_view base, int e);

}  // namespace text

LaurentQ parse_laurent(std::string_view s);
std::string format_laurent(const LaurentQ& p);

/// Comma separated rationals, e.g. "1,1/2,1/3".
std::vector<Rational> parse_rational_list(std::string_view s);

}  // namespace witt

#endif
