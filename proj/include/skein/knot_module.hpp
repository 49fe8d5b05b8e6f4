#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "skein/errors.hpp"
#include "skein/handlebody.hpp"
#include "skein/poly2.hpp"

namespace skein {

// Element of the skein module of the 3-twist knot complement, basis x^n y^k with 0 <= k <= 3.
class KnotModuleElement {
 public:
  static constexpr int kMaxY = 3;

  KnotModuleElement() = default;
  explicit KnotModuleElement(Poly2 p) : p_(std::move(p)) {
    if (p_.y_degree() > kMaxY) throw InvariantViolation("module element with y-degree above 3");
  }
  static KnotModuleElement basis(int n, int k, const LaurentPoly& c = 1) {
    return KnotModuleElement(Poly2::monomial(c, n, k));
  }

  const Poly2& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  ChebView cheb() const { return to_cheb(p_); }

  KnotModuleElement times_x(int k = 1) const { return KnotModuleElement(p_.times_x(k), Trusted{}); }

  KnotModuleElement& operator+=(const KnotModuleElement& o) {
    p_ += o.p_;
    return *this;
  }
  KnotModuleElement& operator-=(const KnotModuleElement& o) {
    p_ -= o.p_;
    return *this;
  }
  friend KnotModuleElement operator+(KnotModuleElement a, const KnotModuleElement& b) { return a += b; }
  friend KnotModuleElement operator-(KnotModuleElement a, const KnotModuleElement& b) { return a -= b; }
  friend KnotModuleElement operator*(const LaurentPoly& s, const KnotModuleElement& a) {
    return KnotModuleElement(s * a.p_, Trusted{});
  }
  friend bool operator==(const KnotModuleElement& a, const KnotModuleElement& b) { return a.p_ == b.p_; }

 private:
  struct Trusted {};
  KnotModuleElement(Poly2 p, Trusted) : p_(std::move(p)) {}
  Poly2 p_;
};

struct ReductionRules {
  std::array<KnotModuleElement, 3> S;          // S_4(y), S_5(y), S_6(y) in the module
  std::array<LaurentPoly, 3> leading;          // unit coefficient of S_{k+4}(y) in the k-th identity
  KnotModuleElement X4;                        // X_4 written in the module basis

  const KnotModuleElement& rule(int d) const { return S.at(d - 4); }
};

class KnotModule;
const KnotModule& knot_module();

class KnotModule {
 public:
  static constexpr int kMaxReducible = 6;

  const ReductionRules& rules() const {
    std::call_once(once_, [this] { rules_ = derive(); });
    return *rules_;
  }

  // Replaces y^d, d in 4..6, by S_d(y) + (y^d - S_d(y)) and S_d(y) by its rule until y-degree <= 3.
  KnotModuleElement reduce(const HandlebodyElement& e) const { return reduce_with(e, rules()); }

  // X_j * y^k in the module for any k >= 0. j = 0 stands for Y_1.
  KnotModuleElement xj_power(int j, int k) const {
    if (j < 0 || j > 4 || k < 0) throw InvalidKey("xj_power needs 0 <= j <= 4, k >= 0");
    auto key = std::make_pair(j, k);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = xa_.find(key);
      if (it != xa_.end()) return it->second;
    }
    KnotModuleElement v = compute_xa(j, k);
    std::lock_guard<std::mutex> lock(mu_);
    xa_.emplace(key, v);
    return v;
  }

  // X_j * S_k(y): power-route values combined linearly.
  KnotModuleElement xj_action(int j, int k) const {
    if (j < 1 || j > 4 || k < 0) throw InvalidKey("xj_action needs 1 <= j <= 4, k >= 0");
    return on_S(j, k);
  }

  // X_j * S_k(y) through the three-term recursion in the S_k(y) basis.
  KnotModuleElement xj_action_scheme(int j, int k) const {
    if (j < 1 || j > 4 || k < 0) throw InvalidKey("xj_action_scheme needs 1 <= j <= 4, k >= 0");
    return scheme(j, k);
  }

 private:
  static KnotModuleElement reduce_with(Poly2 p, const ReductionRules& r, int known = 6) {
    for (;;) {
      int d = p.y_degree();
      if (d <= KnotModuleElement::kMaxY) return KnotModuleElement(std::move(p));
      if (d > kMaxReducible) throw DegreeTooHigh(d);
      if (d > known) throw InvariantViolation("reduction rule used before it was derived");
      Poly2 c = p.y_slice(d);
      p -= c * Poly2::y(d);
      p += c * (r.rule(d).poly() + Poly2::y(d) - Sy(d));
    }
  }

  static ReductionRules derive() {
    ReductionRules r;
    for (int k = 0; k < 3; ++k) {
      int top = k + 4;
      HandlebodyElement ident = family_eval({Family::X, 4, k}) + tpow(-4) * family_eval({Family::X, 3, k}) +
                                tpow(-2) * Poly2::monomial(1, 2, k);
      ChebView ch = to_cheb(ident);
      std::optional<LaurentPoly> lead;
      for (const auto& [ab, c] : ch) {
        if (ab.second < top) continue;
        if (ab.second > top || ab.first != 0) throw NonUnitLeadingCoefficient(k);
        lead = c;
      }
      if (!lead || !lead->is_unit()) throw NonUnitLeadingCoefficient(k);
      HandlebodyElement rest = ident - *lead * Sy(top);
      Poly2 solved;
      for (const auto& [e, c] : rest.terms()) solved.add(e.first, e.second, -div_by_unit(c, *lead));
      r.leading[k] = *lead;
      r.S[k] = reduce_with(solved, r, top - 1);
    }
    r.X4 = reduce_with(-tpow(-4) * family_eval({Family::X, 3, 0}) - tpow(-2) * Poly2::x(2), r);
    return r;
  }

  KnotModuleElement compute_xa(int j, int k) const {
    if (j == 0) return reduce(family_eval({Family::Y, 1, k}));
    if (j + k <= kMaxReducible) return reduce(family_eval({Family::X, j, k}));
    Poly2 x2 = Poly2::monomial(1, 2, k);
    if (j == 4)
      return -tpow(-4) * xj_power(3, k) - tpow(-2) * reduce(x2);
    // X_j * y^{k} = t^2 X_{j+1} * y^{k-1} + t^-2 X_{j-1} * y^{k-1} + 2 x^2 y^{k-1}
    return tpow(2) * xj_power(j + 1, k - 1) + tpow(-2) * xj_power(j - 1, k - 1) +
           reduce(LaurentPoly(2) * Poly2::monomial(1, 2, k - 1));
  }

  KnotModuleElement on_S(int j, int k) const {
    KnotModuleElement r;
    for (const auto& [i, c] : S_power_coeffs(k)) r += LaurentPoly(c) * xj_power(j, i);
    return r;
  }

  KnotModuleElement scheme(int j, int k) const {
    if (j == 0) return on_S(0, k);
    if (j == 4) return -tpow(-4) * scheme(3, k) - tpow(-2) * reduce(Poly2::x(2) * Sy(k));
    if (k == 0) return reduce(family_eval({Family::X, j, 0}));
    KnotModuleElement r = tpow(2) * scheme(j + 1, k - 1) + tpow(-2) * scheme(j - 1, k - 1) +
                          reduce((LaurentPoly(2) * Sx(2) + LaurentPoly(2)) * Sy(k - 1));
    if (k >= 2) r -= scheme(j, k - 2);
    return r;
  }

  mutable std::once_flag once_;
  mutable std::optional<ReductionRules> rules_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, KnotModuleElement> xa_;
};

inline const KnotModule& knot_module() {
  static const KnotModule m;
  return m;
}

inline KnotModuleElement reduce(const HandlebodyElement& e) { return knot_module().reduce(e); }
inline const ReductionRules& derive_reductions() { return knot_module().rules(); }
inline KnotModuleElement xj_action(int j, int k) { return knot_module().xj_action(j, k); }

}  // namespace skein
