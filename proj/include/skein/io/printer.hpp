#pragma once

#include <string>
#include <vector>

#include "skein/boundary_action.hpp"
#include "skein/laurent.hpp"
#include "skein/poly2.hpp"
#include "skein/torus.hpp"

namespace skein {

enum class Basis { Power, Chebyshev };

struct PrintStyle {
  bool pretty = false;  // Unicode exponents and subscripts, no '*'
  bool q_mode = false;  // coefficients with exponents divisible by 4 written in q
};

namespace detail {

inline std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char ch : std::to_string(n)) s += digits[ch - '0'];
  return s;
}

inline std::string var_power(const char* v, int e, bool pretty) {
  if (e == 1) return v;
  return std::string(v) + (pretty ? superscript(e) : "^" + std::to_string(e));
}

inline std::string join_atoms(const std::vector<std::string>& parts, bool pretty) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i && !pretty) s += "*";
    s += parts[i];
  }
  return s;
}

inline std::string power_atom(int m, int n, bool pretty) {
  std::vector<std::string> parts;
  if (m) parts.push_back(var_power("x", m, pretty));
  if (n) parts.push_back(var_power("y", n, pretty));
  return join_atoms(parts, pretty);
}

inline std::string cheb_atom(int a, int b, bool pretty) {
  std::vector<std::string> parts;
  auto one = [&](int i, const char* v) {
    return pretty ? "S" + subscript(i) + "(" + v + ")" : "S_" + std::to_string(i) + "(" + v + ")";
  };
  if (a) parts.push_back(one(a, "x"));
  if (b) parts.push_back(one(b, "y"));
  return join_atoms(parts, pretty);
}

struct TermWriter {
  PrintStyle style;
  std::string out;
  bool first = true;

  void add(const LaurentPoly& c, const std::string& atom) {
    bool neg = false;
    std::string body;
    if (c.is_monomial()) {
      const auto& [e, coef] = *c.terms().begin();
      neg = coef < 0;
      Int absc = neg ? Int(-coef) : coef;
      LaurentPoly mag = LaurentPoly::monomial(absc, e);
      if (atom.empty())
        body = to_text(mag, "t", style.pretty, style.q_mode);
      else if (absc == 1 && e == 0)
        body = atom;
      else
        body = to_text(mag, "t", style.pretty, style.q_mode) + (style.pretty ? "" : "*") + atom;
    } else {
      body = "(" + to_text(c, "t", style.pretty, style.q_mode) + ")";
      if (!atom.empty()) body += (style.pretty ? "" : "*") + atom;
    }
    if (first)
      out += (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }

  std::string str() const { return first ? "0" : out; }
};

}  // namespace detail

// Terms ordered by y-index, then x-index, both descending.
inline std::string format_poly2(const Poly2& p, Basis basis, PrintStyle style = {}) {
  std::map<Exp2, LaurentPoly> by_yx;
  if (basis == Basis::Power)
    for (const auto& [e, c] : p.terms()) by_yx.emplace(Exp2{e.second, e.first}, c);
  else
    for (const auto& [e, c] : to_cheb(p)) by_yx.emplace(Exp2{e.second, e.first}, c);
  detail::TermWriter w{style};
  for (auto it = by_yx.rbegin(); it != by_yx.rend(); ++it) {
    auto [n, m] = it->first;
    w.add(it->second, basis == Basis::Power ? detail::power_atom(m, n, style.pretty) : detail::cheb_atom(m, n, style.pretty));
  }
  return w.str();
}

inline std::string format_module(const KnotModuleElement& v, Basis basis, PrintStyle style = {}) {
  return format_poly2(v.poly(), basis, style);
}

inline std::string format_torus(const TorusElement& a, PrintStyle style = {}) {
  detail::TermWriter w{style};
  for (const auto& [c, coeff] : a.curves())
    w.add(coeff, "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")");
  if (!a.empty_coeff().is_zero()) w.add(a.empty_coeff(), "");
  return w.str();
}

// Table entry over u_i = S_{2i+1}(x) or v_i = S_{2i}(x), coefficients in q where possible.
inline std::string format_entry(const TableEntry& e, TableKind kind, bool pretty = false) {
  detail::TermWriter w{{pretty, true}};
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    int a = it->first;
    bool fits = kind == TableKind::Alpha ? a % 2 == 1 : a % 2 == 0;
    std::string atom;
    if (!fits)
      atom = detail::cheb_atom(a, 0, pretty);
    else {
      int i = kind == TableKind::Alpha ? (a - 1) / 2 : a / 2;
      const char* u = kind == TableKind::Alpha ? "u" : "v";
      atom = pretty ? u + detail::subscript(i) : std::string(u) + "_" + std::to_string(i);
    }
    w.add(it->second, atom);
  }
  return w.str();
}

}  // namespace skein
