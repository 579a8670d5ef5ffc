#include "chargen/poly_text.hpp"

#include <cctype>

#include "chargen/errors.hpp"

namespace chargen {

namespace {

void append_monomial(std::string& out, const VarSet& vars, const Monomial& m) {
  bool first = true;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const int e = m[i];
    if (e == 0) continue;
    if (!first) out += '*';
    first = false;
    out += vars.name(i);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
}

class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars) : text_(strip_comments(text)), vars_(vars) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    LaurentPoly p = expr();
    skip_ws();
    if (!at_end()) fail("unexpected character");
    return p;
  }

 private:
  static std::string strip_comments(std::string_view text) {
    std::string out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      std::string_view line = text.substr(pos, nl - pos);
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || line[first] != '#') {
        out.append(line);
        out += ' ';
      }
      pos = nl + 1;
    }
    return out;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t from = pos_ > 20 ? pos_ - 20 : 0;
    throw ParseError(what + " at offset " + std::to_string(pos_) + " near '" +
                     text_.substr(from, 40) + "'");
  }

  LaurentPoly expr() {
    LaurentPoly acc(vars_);
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    LaurentPoly t = term();
    acc = negate ? -t : t;
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (accept('*')) acc = poly_mul(acc, factor());
    return acc;
  }

  LaurentPoly factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    const Integer e = integer();
    if (!e.fits_sint_p() || e > 10000) fail("exponent too large");
    const auto k = static_cast<unsigned>(e.get_si());
    if (!neg) return base.pow(k);
    if (base.size() != 1) fail("negative power of a non-monomial");
    const auto& t = base.terms()[0];
    return LaurentPoly::monomial(vars_, t.monomial.pow(-1), 1 / t.coefficient).pow(k);
  }

  LaurentPoly primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer());
      skip_ws();
      // A '/' directly after an integer literal forms a rational literal.
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        Integer den = integer();
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
      }
      return LaurentPoly(vars_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (!vars_.contains(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return LaurentPoly::variable(vars_, name);
    }
    fail(at_end() ? "unexpected end of input" : "unexpected character");
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(text_.substr(start, pos_ - start));
  }

  std::string text_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coefficient < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(t.coefficient);
    if (t.monomial.is_one()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    append_monomial(out, p.vars(), t.monomial);
  }
  return out;
}

LaurentPoly parse_poly(std::string_view text, const VarSet& vars) {
  return Parser(text, vars).parse();
}

}  // namespace chargen
