#include "superlsa/ratfun.hpp"

#include <cctype>
#include <stdexcept>

namespace superlsa {

namespace {

// recursive-descent expression parser over Q(a):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-'|'+')* base ('^' uint)?
//   base   := uint | 'a' | '(' expr ')'
struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error at offset " + std::to_string(pos) + ": " + what);
  }

  RatFun parse() {
    RatFun v = expr();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return v;
  }

  RatFun expr() {
    RatFun v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  RatFun term() {
    RatFun v = factor();
    for (;;) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) {
        RatFun d = factor();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else return v;
    }
  }

  RatFun factor() {
    bool neg = false;
    for (;;) {
      if (eat('-')) neg = !neg;
      else if (eat('+')) {}
      else break;
    }
    RatFun v = base();
    if (eat('^')) {
      unsigned long e = uint_lit();
      RatFun p(Rational(1));
      for (unsigned long i = 0; i < e; ++i) p = p * v;
      v = p;
    }
    return neg ? -v : v;
  }

  RatFun base() {
    char c = peek();
    if (c == '(') {
      ++pos;
      RatFun v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'a') {
      ++pos;
      if (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) fail("unknown symbol");
      return RatFun::parameter();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(Rational(uint_lit_str()));
    fail("expected number, 'a', or '('");
  }

  unsigned long uint_lit() {
    std::string digits = uint_lit_str();
    return std::stoul(digits);
  }

  std::string uint_lit_str() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return s.substr(start, pos - start);
  }
};

std::string poly_to_string(const UnivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = p.coeff(d);
    if (c == 0) continue;
    bool first = out.empty();
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (d == 0) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag) + "*";
      out += d == 1 ? "a" : "a^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace

RatFun parse_scalar(const std::string& text) {
  Parser p(text);
  return p.parse();
}

std::string scalar_to_string(const RatFun& f) {
  if (f.is_rational()) return rational_to_string(f.to_rational());
  if (f.den().degree() == 0) return poly_to_string(f.num());
  return "(" + poly_to_string(f.num()) + ")/(" + poly_to_string(f.den()) + ")";
}

}  // namespace superlsa
