#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>

#include "skein/skein.hpp"

namespace skein::testing {

using Rational = boost::multiprecision::cpp_rational;

// Evaluation at an integer point: a ring homomorphism, independent of the sparse product code.
inline Rational eval(const LaurentPoly& p, int at) {
  Rational r = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational m = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) m *= at;
    r += Rational(c) * (e < 0 ? Rational(1) / m : m);
  }
  return r;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  LaurentPoly laurent(int max_terms = 5, int span = 10, int coeff = 20) {
    LaurentPoly p;
    int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) {
      Int c = uniform(-coeff, coeff);
      if (uniform(0, 9) == 0) c *= Int("1000000000000000000000000000000");
      p.add_term(uniform(-span, span), c);
    }
    return p;
  }

  LaurentPoly nonzero_laurent() {
    for (;;)
      if (auto p = laurent(); !p.is_zero()) return p;
  }

  Poly2 poly2(int max_terms = 5, int max_x = 5, int max_y = 3) {
    Poly2 p;
    int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) p.add(uniform(0, max_x), uniform(0, max_y), laurent(3, 8, 9));
    return p;
  }

  TorusElement torus(int max_terms = 4, int span = 6) {
    TorusElement a;
    int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) a.add_curve(uniform(-span, span), uniform(-span, span), laurent(3, 8, 9));
    return a;
  }

 private:
  std::mt19937_64 rng_;
};

// (p,q)_T through the s = 1 instance of product-to-sum:
// (1,1)_T (p-1,q-1)_T = t^{q-p} (p,q)_T + t^{p-q} (p-2,q-2)_T.
inline KnotModuleElement peel_s1(const ActionEngine& engine, int p, int q, const KnotModuleElement& v) {
  Canonical c = canonicalize(p, q);
  if (c.empty_times2) return LaurentPoly(2) * v;
  p = c.curve.p;
  q = c.curve.q;
  if (p <= 1) return engine.act_curve(p, q, v);
  KnotModuleElement inner = engine.act_curve(1, 1, peel_s1(engine, p - 1, q - 1, v));
  return tpow(p - q) * (inner - tpow(p - q) * peel_s1(engine, p - 2, q - 2, v));
}

// Solid torus: meridian (1,0)_T bounds a disk, longitude (0,1)_T is x; only k = 0 occurs.
inline Seeds solid_torus_seeds() {
  KnotModuleElement F0 = KnotModuleElement::basis(0, 0, -tpow(2) - tpow(-2));
  KnotModuleElement F1 = KnotModuleElement::basis(1, 0, -tpow(3));
  KnotModuleElement Fm1 = ActionEngine::ladder_down(F0, F1);
  KnotModuleElement Fm2 = ActionEngine::ladder_down(Fm1, F0);
  KnotModuleElement Fm3 = ActionEngine::ladder_down(Fm2, Fm1);
  return {{{-3, 0}, Fm3}, {{-2, 0}, Fm2}};
}

inline LaurentPoly delta() { return -tpow(2) - tpow(-2); }

// Capping off in the 3-sphere: x^n y^k becomes n + k parallel trivial loops.
inline LaurentPoly cap_off(const KnotModuleElement& v) {
  LaurentPoly r;
  for (const auto& [e, c] : v.poly().terms()) {
    LaurentPoly d = 1;
    for (int i = 0; i < e.first + e.second; ++i) d = d * delta();
    r += c * d;
  }
  return r;
}

}  // namespace skein::testing
