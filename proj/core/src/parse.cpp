#include "gca/parse.hpp"

#include <cctype>
#include <sstream>

namespace gca {

namespace {

struct Parser {
  const std::string& text;
  const Chart& chart;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos;
    std::string digits;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
      digits += text[pos++];
    if (digits.empty()) throw ParseError("expected integer", start);
    return Integer(digits);
  }

  Poly primary() {
    skip_ws();
    std::size_t start = pos;
    char c = peek();
    if (c == '(') {
      ++pos;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos);
      return inner;
    }
    if (std::isdigit((unsigned char)c))
      return Poly::constant(chart, Rational(integer()));
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string name;
      while (pos < text.size() &&
             (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
        name += text[pos++];
      auto idx = chart.find(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return Poly::variable(chart, *idx);
    }
    throw ParseError("expected a number, variable or '('", start);
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t at = pos;
    bool negative = accept('-');
    Integer e = integer();
    if (e > 1000) throw ParseError("exponent too large", at);
    int exponent = int(e);
    try {
      return base.pow(negative ? -exponent : exponent);
    } catch (const Error& err) {
      throw ParseError(err.what(), at);
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (peek() == '/') {
        std::size_t at = pos;
        ++pos;
        Poly d = unary();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("division requires a nonzero constant divisor", at);
        Rational c = d.constant_value();
        acc = acc.scaled(Rational(denominator(c), numerator(c)));
      } else {
        break;
      }
    }
    return acc;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }
};

}  // namespace

Poly parse_expr(const std::string& text, const Chart& chart) {
  Parser p{text, chart};
  Poly result = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("unexpected trailing input", p.pos);
  return result;
}

std::string render(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string render(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : f.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string factors;
    auto append = [&](const std::string& name, int e) {
      if (!factors.empty()) factors += "*";
      factors += name;
      if (e != 1) factors += "^" + std::to_string(e);
    };
    for (auto& [v, e] : m.even) append(f.chart().var(v).name, e);
    for (int v : m.odd) append(f.chart().var(v).name, 1);
    if (factors.empty()) {
      os << render(mag);
    } else {
      if (mag != 1) os << render(mag) << "*";
      os << factors;
    }
  }
  return os.str();
}

}  // namespace gca
