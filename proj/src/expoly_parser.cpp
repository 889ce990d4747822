#include "burnside/expoly_parser.hpp"

#include <cctype>

namespace burnside {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExpPoly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    ExpPoly value = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool starts_primary() {
    skip_space();
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(' ||
           c == 'E' || c == 'e';
  }

  ExpPoly expression() {
    ExpPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  ExpPoly term() {
    ExpPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        ExpPoly divisor = factor();
        if (!divisor.is_polynomial() || divisor.polynomial(0).degree() != 0) {
          pos_ = at;
          fail("divisor must be a nonzero rational constant");
        }
        acc *= Rational(1) / divisor.polynomial(0).coefficient(0);
      } else if (starts_primary()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  ExpPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  ExpPoly power() {
    ExpPoly base = primary();
    if (!accept('^')) return base;
    const unsigned long n = exponent();
    ExpPoly out = ExpPoly::constant(1);
    for (unsigned long i = 0; i < n; ++i) out = out * base;
    return out;
  }

  unsigned long exponent() {
    skip_space();
    const bool paren = accept('(');
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("exponent must be a nonnegative integer");
    const BigInt n = integer();
    if (n > 4096) fail("exponent too large");
    if (paren) expect(')');
    return n.convert_to<unsigned long>();
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  ExpPoly number() {
    BigInt whole = integer();
    Rational value(whole);
    if (peek() == '.') {
      ++pos_;
      const std::size_t start = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digit expected after '.'");
      BigInt frac = integer();
      BigInt scale = pow(BigInt(10), static_cast<unsigned>(pos_ - start));
      value += Rational(frac, scale);
    }
    return ExpPoly::constant(value);
  }

  ExpPoly primary() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '(') {
      ++pos_;
      ExpPoly inner = expression();
      expect(')');
      return inner;
    }
    if (text_.substr(pos_, 3) == "exp") {
      pos_ += 3;
      skip_space();
      const std::size_t at = pos_;
      expect('(');
      ExpPoly arg = expression();
      expect(')');
      return exponential_of(arg, at);
    }
    if (c == 't') {
      ++pos_;
      return ExpPoly::variable();
    }
    if (c == 'E' || c == 'e') {
      ++pos_;
      skip_space();
      if (peek() != '^') fail("'E' must be followed by '^'");
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      ExpPoly arg;
      if (accept('(')) {
        arg = expression();
        expect(')');
      } else if (peek() == 't') {
        ++pos_;
        arg = ExpPoly::variable();
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        arg = ExpPoly::constant(Rational(integer()));
      } else {
        fail("exponent of E expected");
      }
      return exponential_of(arg, at);
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  // The argument must be k*t with k a nonnegative integer.
  ExpPoly exponential_of(const ExpPoly& arg, std::size_t at) {
    if (arg.is_zero()) return ExpPoly::constant(1);
    const Poly p = arg.polynomial(0);
    if (!arg.is_polynomial() || p.degree() != 1 || p.coefficient(0) != 0) {
      pos_ = at;
      fail("exponential argument must have the form k*t");
    }
    const Rational k = p.coefficient(1);
    if (k < 0 || denominator(k) != 1) {
      pos_ = at;
      fail("non-integer or negative exponential degree " + k.str());
    }
    if (k > 1'000'000) {
      pos_ = at;
      fail("exponential degree too large");
    }
    return ExpPoly::exponential(numerator(k).convert_to<unsigned>());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExpPoly parse_expoly(std::string_view text) { return Parser(text).parse(); }

}  // namespace burnside
