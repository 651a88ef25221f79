#ifndef GCA_PARSE_HPP
#define GCA_PARSE_HPP

#include <string>

#include "gca/poly.hpp"

namespace gca {

/// Syntax or lexical failure, with a 0-based character position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `+ - * / ^` expressions over rational literals and chart
/// variables. Juxtaposition is not multiplication; `^` takes an integer
/// exponent (negative only on invertible generators); `/` requires a
/// nonzero constant divisor. The written factor order is preserved and the
/// kernel normalizes with Koszul signs.
Poly parse_expr(const std::string& text, const Chart& chart);

/// Canonical expression string: terms in monomial normal-form order,
/// even factors then odd factors by chart order. parse_expr(render(f)) == f.
std::string render(const Poly& f);

std::string render(const Rational& r);

}  // namespace gca

#endif
