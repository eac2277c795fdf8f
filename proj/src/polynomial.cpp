#include "grouprep/polynomial.hpp"

#include <cctype>

#include "grouprep/errors.hpp"

namespace grouprep {

Polynomial::Polynomial(QuadNumber constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial Polynomial::variable(int axis) {
  if (axis < 0 || axis > 2) throw DimensionMismatchError("variable axis out of range");
  Polynomial p;
  Monomial m;
  (axis == 0 ? m.a : axis == 1 ? m.b : m.c) = 1;
  p.terms_.emplace(m, QuadNumber(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

QuadNumber Polynomial::constant_value() const {
  if (!is_constant()) throw NotRepresentableError("polynomial is not constant");
  return terms_.empty() ? QuadNumber() : terms_.begin()->second;
}

QuadNumber Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QuadNumber() : it->second;
}

void Polynomial::add_term(const Monomial& m, const QuadNumber& c) {
  auto it = terms_.find(m);
  QuadNumber v = (it == terms_.end() ? QuadNumber() : it->second) + c;
  if (v.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(m, std::move(v));
  } else {
    it->second = std::move(v);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.a + mb.a, ma.b + mb.b, ma.c + mb.c}, ca * cb);
  return r;
}

Polynomial operator*(const QuadNumber& s, const Polynomial& p) {
  Polynomial r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw NotRepresentableError("negative polynomial power");
  Polynomial r{QuadNumber(1)};
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs) const {
  if (subs.size() != 3) throw DimensionMismatchError("need three substitutions");
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Polynomial t{c};
    if (m.a) t = t * subs[0].pow(m.a);
    if (m.b) t = t * subs[1].pow(m.b);
    if (m.c) t = t * subs[2].pow(m.c);
    r = r + t;
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // Canonical order: total degree descending, then exponents descending.
  std::vector<std::pair<Monomial, QuadNumber>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    if (l.first.degree() != r.first.degree())
      return l.first.degree() > r.first.degree();
    return l.first > r.first;
  });
  std::string out;
  for (const auto& [m, c] : sorted) {
    int sign = c.sign();
    QuadNumber mag = sign < 0 ? -c : c;
    if (out.empty()) {
      if (sign < 0) out += "-";
    } else {
      out += sign < 0 ? " - " : " + ";
    }
    std::string vars;
    auto append_var = [&vars](char name, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    append_var('x', m.a);
    append_var('y', m.b);
    append_var('z', m.c);
    if (vars.empty()) {
      std::string cs = mag.str();
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      out += cs;
    } else if (mag.is_one()) {
      out += vars;
    } else {
      std::string cs = mag.str();
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      out += cs + "*" + vars;
    }
  }
  return out;
}

namespace {

// Recursive-descent parser for the polynomial syntax:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ['^' INT]
//   base   := INT | sqrt '(' expr ')' | x | y | z | '(' expr ')'
// Division requires a constant divisor; sqrt a constant argument.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at position " +
                     std::to_string(pos_) + ": " + msg + " in '" +
                     std::string(text_) + "'");
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

  Polynomial expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial p = term();
    if (neg) p = -p;
    for (;;) {
      if (eat('+')) p = p + term();
      else if (eat('-')) p = p - term();
      else return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      if (eat('*')) {
        p = p * factor();
      } else if (eat('/')) {
        Polynomial d = factor();
        if (!d.is_constant()) fail("division by a non-constant polynomial");
        QuadNumber v = d.constant_value();
        if (v.is_zero()) fail("division by zero");
        p = v.inverse() * p;
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    Polynomial base_value = base();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected integer exponent");
      int e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        e = e * 10 + (text_[pos_++] - '0');
      return base_value.pow(e);
    }
    return base_value;
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return Polynomial{QuadNumber(
          Rational::from_string(std::string(text_.substr(start, pos_ - start))))};
    }
    if (c == 'x') { eat('x'); return Polynomial::variable(0); }
    if (c == 'y') { eat('y'); return Polynomial::variable(1); }
    if (c == 'z') { eat('z'); return Polynomial::variable(2); }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word != "sqrt") fail("unknown identifier '" + word + "'");
      if (!eat('(')) fail("expected '(' after sqrt");
      Polynomial arg = expr();
      if (!eat(')')) fail("expected ')'");
      if (!arg.is_constant()) fail("sqrt of a non-constant polynomial");
      QuadNumber v = arg.constant_value();
      if (!v.is_rational())
        throw NotRepresentableError("sqrt of irrational argument " + v.str());
      return Polynomial{sqrt_rational(v.rational_value())};
    }
    fail("expected a number, variable, sqrt(...), or '('");
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  return PolyParser(text).run();
}

}  // namespace grouprep
