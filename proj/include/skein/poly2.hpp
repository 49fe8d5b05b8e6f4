#pragma once

#include <algorithm>
#include <map>
#include <utility>

#include "skein/chebyshev.hpp"
#include "skein/laurent.hpp"

namespace skein {

using Exp2 = std::pair<int, int>;  // (x-exponent, y-exponent) or (a, b) Chebyshev indices

// Coefficients of S_a(x) S_b(y).
using ChebView = std::map<Exp2, LaurentPoly>;

// Polynomial in the commuting curves x, y with LaurentPoly coefficients.
class Poly2 {
 public:
  using Terms = std::map<Exp2, LaurentPoly>;

  Poly2() = default;
  Poly2(const LaurentPoly& c) { add(0, 0, c); }  // NOLINT(google-explicit-constructor)
  Poly2(int c) : Poly2(LaurentPoly(c)) {}        // NOLINT(google-explicit-constructor)

  static Poly2 monomial(const LaurentPoly& c, int m, int n) {
    Poly2 p;
    p.add(m, n, c);
    return p;
  }
  static Poly2 x(int m = 1) { return monomial(1, m, 0); }
  static Poly2 y(int n = 1) { return monomial(1, 0, n); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly coeff(int m, int n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  void add(int m, int n, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace({m, n}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int y_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }
  int x_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }

  Poly2 times_x(int k = 1) const { return shifted(k, 0); }
  Poly2 times_y(int k = 1) const { return shifted(0, k); }
  Poly2 shifted(int dm, int dn) const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Exp2{e.first + dm, e.second + dn}, c);
    return r;
  }

  // Terms with y-exponent n, as a polynomial in x only.
  Poly2 y_slice(int n) const {
    Poly2 r;
    for (const auto& [e, c] : terms_)
      if (e.second == n) r.add(e.first, 0, c);
    return r;
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, -c);
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(const Poly2& a) {
    Poly2 r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend Poly2 operator*(const LaurentPoly& s, const Poly2& p) {
    Poly2 r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), e, s * c);
    return r;
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

inline Poly2 bar(const Poly2& p) {
  Poly2 r;
  for (const auto& [e, c] : p.terms()) r.add(e.first, e.second, bar(c));
  return r;
}

// Polynomial in y with integer coefficients, e.g. S_n(y).
inline Poly2 from_y_coeffs(const std::map<int, Int>& c) {
  Poly2 r;
  for (const auto& [n, v] : c) r.add(0, n, LaurentPoly(v));
  return r;
}

inline Poly2 Sx(int a) {
  Poly2 r;
  for (const auto& [i, v] : S_power_coeffs(a)) r.add(i, 0, LaurentPoly(v));
  return r;
}
inline Poly2 Sy(int b) { return from_y_coeffs(S_power_coeffs(b)); }
inline Poly2 Sxy(int a, int b) { return Sx(a) * Sy(b); }

// The two variables are converted independently since S_a(x) S_b(y) is a product basis.
inline ChebView to_cheb(const Poly2& p) {
  std::map<int, UnivariatePoly> by_y;
  for (const auto& [e, c] : p.terms()) by_y[e.second].add(e.first, c);
  std::map<int, UnivariatePoly> by_a;  // a -> polynomial in y
  for (const auto& [n, px] : by_y)
    for (const auto& [a, c] : power_to_S(px)) by_a[a].add(n, c);
  ChebView out;
  for (const auto& [a, py] : by_a)
    for (const auto& [b, c] : power_to_S(py)) out.emplace(Exp2{a, b}, c);
  return out;
}

inline Poly2 from_cheb(const ChebView& v) {
  std::map<int, ChebCoeffs> by_b;  // b -> (a -> coeff)
  for (const auto& [e, c] : v) by_b[e.second].emplace(e.first, c);
  Poly2 out;
  for (const auto& [b, ca] : by_b) {
    UnivariatePoly px = S_to_power(ca);
    for (const auto& [j, s] : S_power_coeffs(b))
      for (const auto& [m, c] : px.coeffs()) out.add(m, j, LaurentPoly(s) * c);
  }
  return out;
}

inline ChebView cheb_add(ChebView a, const ChebView& b, const LaurentPoly& scale = 1) {
  for (const auto& [e, c] : b) {
    auto [it, fresh] = a.try_emplace(e, scale * c);
    if (!fresh) {
      it->second += scale * c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

}  // namespace skein
