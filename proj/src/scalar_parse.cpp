#include <cctype>
#include <string>
#include <string_view>

#include "grouprep/quad_number.hpp"

namespace grouprep {
namespace {

// Recursive-descent parser for the exact-scalar expression syntax:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := INT | sqrt '(' expr ')' | '(' expr ')'
// sqrt arguments must evaluate to non-negative rationals representable in
// the field (sqrt(2), sqrt(3), sqrt(6), but also sqrt(4), sqrt(1/24), ...).
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  QuadNumber run() {
    QuadNumber v = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return v;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("scalar parse error at position " + std::to_string(pos_) +
                     ": " + msg + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  QuadNumber expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    QuadNumber v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  QuadNumber term() {
    QuadNumber v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        QuadNumber d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  QuadNumber factor() {
    char c = peek();
    if (c == '(') {
      eat('(');
      QuadNumber v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word = identifier();
      if (word != "sqrt") fail("unknown identifier '" + word + "'");
      if (!eat('(')) fail("expected '(' after sqrt");
      QuadNumber arg = expr();
      if (!eat(')')) fail("expected ')'");
      if (!arg.is_rational())
        throw NotRepresentableError("sqrt of irrational argument " + arg.str());
      return sqrt_rational(arg.rational_value());
    }
    fail("expected a number, sqrt(...), or '('");
  }

  QuadNumber integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    return QuadNumber(Rational::from_string(digits));
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
};

}  // namespace

QuadNumber QuadNumber::parse(std::string_view text) {
  return ScalarParser(text).run();
}

}  // namespace grouprep
