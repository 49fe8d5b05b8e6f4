#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skein/errors.hpp"
#include "skein/knot_module.hpp"
#include "skein/poly2.hpp"
#include "skein/torus.hpp"

namespace skein {

// Grammar (whitespace ignored, '*' optional between factors):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*'? factor)*
//   factor  := primary ['^' ['-'] int]
//   primary := int | t | q | x | y | S_n(x) | S_n(y) | u_n | v_n | (p,q) | '(' expr ')'
// q stands for t^4, u_n for S_{2n+1}(x), v_n for S_{2n}(x).
class ExpressionParser {
 public:
  struct Value {
    Poly2 poly;
    std::optional<TorusElement> torus;
    bool is_scalar() const {
      for (const auto& [e, c] : poly.terms())
        if (e.first || e.second) return false;
      return true;
    }
  };

  explicit ExpressionParser(std::string_view text) : s_(text) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail({"+", "-", "*", "end of input"});
    return v;
  }

  bool used_chebyshev() const { return cheb_; }
  bool used_power() const { return power_; }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail({std::string(1, c)});
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail({"integer"});
    if (pos_ - start > 9) {
      pos_ = start;
      fail({"integer below 10^9"});
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  Int big_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail({"integer"});
    return Int(std::string(s_.substr(start, pos_ - start)));
  }
  int signed_integer() {
    bool neg = accept('-');
    int v = integer();
    return neg ? -v : v;
  }

  Value add(Value a, const Value& b, bool negate, std::size_t at) {
    Value bb = b;
    if (negate) {
      bb.poly = -bb.poly;
      if (bb.torus) bb.torus = LaurentPoly(-1) * *bb.torus;
    }
    if (!a.torus && !bb.torus) {
      a.poly += bb.poly;
      return a;
    }
    auto promote = [&](const Value& v) -> TorusElement {
      if (v.torus) return *v.torus;
      if (!v.is_scalar()) {
        pos_ = at;
        fail({"torus term (p,q)"});
      }
      return TorusElement::scalar(v.poly.coeff(0, 0));
    };
    Value r;
    r.torus = promote(a) + promote(bb);
    return r;
  }

  Value multiply(const Value& a, const Value& b, std::size_t at) {
    Value r;
    if (!a.torus && !b.torus) {
      r.poly = a.poly * b.poly;
      return r;
    }
    if (a.torus && b.torus) {
      r.torus = mul(*a.torus, *b.torus);
      return r;
    }
    const Value& sc = a.torus ? b : a;
    const TorusElement& te = a.torus ? *a.torus : *b.torus;
    if (!sc.is_scalar()) {
      pos_ = at;
      fail({"scalar coefficient"});
    }
    r.torus = sc.poly.coeff(0, 0) * te;
    return r;
  }

  Value expr() {
    skip_ws();
    std::size_t at = pos_;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Value v = term();
    if (neg) v = add(Value{}, v, true, at);
    for (;;) {
      skip_ws();
      at = pos_;
      if (accept('+'))
        v = add(v, term(), false, at);
      else if (accept('-'))
        v = add(v, term(), true, at);
      else
        return v;
    }
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 't' || c == 'q' || c == 'x' ||
           c == 'y' || c == 'S' || c == 'u' || c == 'v';
  }

  Value term() {
    Value v = factor();
    for (;;) {
      skip_ws();
      std::size_t at = pos_;
      if (accept('*'))
        v = multiply(v, factor(), at);
      else if (starts_factor())
        v = multiply(v, factor(), at);
      else
        return v;
    }
  }

  Value factor() {
    skip_ws();
    std::size_t at = pos_;
    bool laurent_var = pos_ < s_.size() && (s_[pos_] == 't' || s_[pos_] == 'q');
    bool curve_var = pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'y');
    Value base = primary();
    if (!accept('^')) return base;
    std::size_t exp_at = pos_;
    int e = signed_integer();
    if (laurent_var || curve_var) {
      if (e < 0 && curve_var) {
        pos_ = exp_at;
        fail({"non-negative exponent"});
      }
      // base is a single monomial; scale its exponent
      const auto& [key, c] = *base.poly.terms().begin();
      Value r;
      if (laurent_var)
        r.poly = Poly2(tpow(c.max_exp() * e));
      else
        r.poly = Poly2::monomial(1, key.first * e, key.second * e);
      return r;
    }
    if (e < 0) {
      pos_ = exp_at;
      fail({"non-negative exponent"});
    }
    Value r;
    r.poly = 1;
    if (base.torus) r.torus = TorusElement::scalar(1);
    for (int i = 0; i < e; ++i) r = multiply(r, base, at);
    return r;
  }

  int subscript() {
    expect('_');
    bool brace = accept('{');
    int n = integer();
    if (brace) expect('}');
    return n;
  }

  Value primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail(primary_expected());
    char c = s_[pos_];
    Value v;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      v.poly = Poly2(LaurentPoly(big_integer()));
      return v;
    }
    switch (c) {
      case 't':
        ++pos_;
        v.poly = Poly2(tpow(1));
        return v;
      case 'q':
        ++pos_;
        v.poly = Poly2(tpow(4));
        return v;
      case 'x':
        ++pos_;
        power_ = true;
        v.poly = Poly2::x();
        return v;
      case 'y':
        ++pos_;
        power_ = true;
        v.poly = Poly2::y();
        return v;
      case 'u':
      case 'v': {
        ++pos_;
        int n = subscript();
        cheb_ = true;
        v.poly = Sx(c == 'u' ? 2 * n + 1 : 2 * n);
        return v;
      }
      case 'S': {
        ++pos_;
        int n = subscript();
        expect('(');
        skip_ws();
        if (accept('x'))
          v.poly = Sx(n);
        else if (accept('y'))
          v.poly = Sy(n);
        else
          fail({"x", "y"});
        expect(')');
        cheb_ = true;
        return v;
      }
      case '(':
        return paren();
      default:
        fail(primary_expected());
    }
  }

  static std::vector<std::string> primary_expected() {
    return {"integer", "t", "q", "x", "y", "S_n(x)", "S_n(y)", "u_n", "v_n", "(p,q)", "("};
  }

  // '(' int ',' int ')' is a torus curve, anything else a parenthesized expression.
  Value paren() {
    expect('(');
    std::size_t save = pos_;
    skip_ws();
    bool neg = pos_ < s_.size() && s_[pos_] == '-';
    if (neg) ++pos_;
    skip_ws();
    std::size_t d0 = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    bool has_int = pos_ > d0;
    if (has_int && peek(',')) {
      pos_ = save;
      int p = signed_integer();
      expect(',');
      int q = signed_integer();
      expect(')');
      Value v;
      v.torus = TorusElement::curve(p, q);
      return v;
    }
    pos_ = save;
    Value v = expr();
    expect(')');
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  bool cheb_ = false;
  bool power_ = false;
};

struct ParseResult {
  std::variant<TorusElement, Poly2> value;
  bool chebyshev_atoms = false;
};

// Torus expression if any (p,q) atom occurs, otherwise a polynomial in x and y.
inline ParseResult parse_expression(std::string_view text) {
  ExpressionParser p(text);
  auto v = p.parse();
  ParseResult r;
  r.chebyshev_atoms = p.used_chebyshev() && !p.used_power();
  if (v.torus)
    r.value = *v.torus;
  else
    r.value = v.poly;
  return r;
}

inline TorusElement parse_torus(std::string_view text) {
  ExpressionParser p(text);
  auto v = p.parse();
  if (v.torus) return *v.torus;
  if (!v.is_scalar()) throw ParseError(0, {"torus expression"}, "polynomial in x, y");
  return TorusElement::scalar(v.poly.coeff(0, 0));
}

inline Poly2 parse_poly2(std::string_view text) {
  ExpressionParser p(text);
  auto v = p.parse();
  if (v.torus) throw ParseError(0, {"polynomial in x, y"}, "torus expression");
  return v.poly;
}

inline KnotModuleElement parse_module(std::string_view text) {
  Poly2 p = parse_poly2(text);
  if (p.y_degree() > KnotModuleElement::kMaxY) throw ParseError(0, {"y-degree <= 3"}, "y-degree " + std::to_string(p.y_degree()));
  return KnotModuleElement(std::move(p));
}

inline LaurentPoly parse_laurent(std::string_view text) {
  Poly2 p = parse_poly2(text);
  for (const auto& [e, c] : p.terms())
    if (e.first || e.second) throw ParseError(0, {"Laurent polynomial in t"}, "x or y");
  return p.coeff(0, 0);
}

}  // namespace skein
