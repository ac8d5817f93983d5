#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "recip/poly.hpp"

namespace recip {

/// Syntax error in a polynomial expression. position() is the zero-based
/// offset of the offending character in the input.
class parse_error : public precondition_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : precondition_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Recursive descent over
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | 'x' | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    IntPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  IntPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    IntPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      IntPoly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  IntPoly term() {
    IntPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  IntPoly factor() {
    IntPoly b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("exponent must be a nonnegative decimal integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large", start);
    const auto e = static_cast<unsigned>(std::stoul(digits));
    skip_ws();
    if (peek() == '^') fail("chained '^' is ambiguous; use parentheses");
    return poly_pow(std::move(b), e);
  }

  IntPoly base() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
        fail("unknown identifier", pos_ - 1);
      return IntPoly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (std::isalpha(static_cast<unsigned char>(peek())))
        fail("implicit multiplication is not supported; write '*'");
      return IntPoly::constant(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') fail("unknown identifier");
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw parse_error(what, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in x and returns it fully expanded.
inline IntPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Canonical descending form, e.g. "x^2 + x - 1"; the zero polynomial is "0".
inline std::string format_poly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Integer& c = p.coeffs()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.str();
    if (k > 0 && mag != 1) out += '*';
    if (k == 1) out += 'x';
    if (k > 1) out += "x^" + std::to_string(k);
  }
  return out;
}

}  // namespace recip
