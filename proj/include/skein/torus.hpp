#pragma once

#include <compare>
#include <map>

#include "skein/laurent.hpp"

namespace skein {

struct Curve {
  int p = 0;
  int q = 0;
  auto operator<=>(const Curve&) const = default;
};

struct Canonical {
  bool empty_times2 = false;  // (0,0)_T is twice the empty link
  Curve curve;
};

inline Canonical canonicalize(int p, int q) {
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  if (p == 0 && q == 0) return {true, {}};
  return {false, {p, q}};
}

// Element of the torus skein algebra in the (p,q)_T basis.
class TorusElement {
 public:
  using Curves = std::map<Curve, LaurentPoly>;

  TorusElement() = default;
  static TorusElement scalar(const LaurentPoly& c) {
    TorusElement e;
    e.empty_ = c;
    return e;
  }
  static TorusElement curve(int p, int q, const LaurentPoly& c = 1) {
    TorusElement e;
    e.add_curve(p, q, c);
    return e;
  }

  const LaurentPoly& empty_coeff() const { return empty_; }
  const Curves& curves() const { return curves_; }
  bool is_zero() const { return empty_.is_zero() && curves_.empty(); }

  void add_curve(int p, int q, const LaurentPoly& c) {
    if (c.is_zero()) return;
    Canonical k = canonicalize(p, q);
    if (k.empty_times2) {
      empty_ += LaurentPoly(2) * c;
      return;
    }
    auto [it, fresh] = curves_.try_emplace(k.curve, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) curves_.erase(it);
    }
  }

  TorusElement& operator+=(const TorusElement& o) {
    empty_ += o.empty_;
    for (const auto& [k, c] : o.curves_) add_curve(k.p, k.q, c);
    return *this;
  }
  TorusElement& operator-=(const TorusElement& o) { return *this += LaurentPoly(-1) * o; }
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const LaurentPoly& s, const TorusElement& a) {
    TorusElement r;
    r.empty_ = s * a.empty_;
    for (const auto& [k, c] : a.curves_) r.add_curve(k.p, k.q, s * c);
    return r;
  }
  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.empty_ == b.empty_ && a.curves_ == b.curves_;
  }

 private:
  LaurentPoly empty_;
  Curves curves_;
};

// (p,q)_T * (r,s)_T = t^D (p+r,q+s)_T + t^{-D} (p-r,q-s)_T with signed D = ps - qr.
inline TorusElement mul_basis(Curve a, Curve b) {
  int D = a.p * b.q - a.q * b.p;
  TorusElement r;
  r.add_curve(a.p + b.p, a.q + b.q, tpow(D));
  r.add_curve(a.p - b.p, a.q - b.q, tpow(-D));
  return r;
}

inline TorusElement mul(const TorusElement& a, const TorusElement& b) {
  TorusElement r = a.empty_coeff() * b;
  for (const auto& [ca, la] : a.curves()) {
    r += (la * b.empty_coeff()) * TorusElement::curve(ca.p, ca.q);
    for (const auto& [cb, lb] : b.curves()) r += (la * lb) * mul_basis(ca, cb);
  }
  return r;
}

inline TorusElement operator*(const TorusElement& a, const TorusElement& b) { return mul(a, b); }

}  // namespace skein
