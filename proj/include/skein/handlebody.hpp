#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "skein/chebyshev.hpp"
#include "skein/errors.hpp"
#include "skein/poly2.hpp"

namespace skein {

// Elements of the skein module of the cylinder over the twice-punctured disk,
// quotiented by x = z, in the basis x^m y^n.
using HandlebodyElement = Poly2;

enum class Family { X, Y, A, Abar, B, Bbar, C, D, E, F, G, H, J };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::X: return "X";
    case Family::Y: return "Y";
    case Family::A: return "A";
    case Family::Abar: return "Abar";
    case Family::B: return "B";
    case Family::Bbar: return "Bbar";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::J: return "J";
  }
  return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
  for (Family f : {Family::X, Family::Y, Family::A, Family::Abar, Family::B, Family::Bbar, Family::C,
                   Family::D, Family::E, Family::F, Family::G, Family::H, Family::J})
    if (s == family_name(f)) return f;
  return std::nullopt;
}

// The skein <family>_<index> * y^<power>.
struct FamilyKey {
  Family family;
  int index = 0;
  int power = 0;
  auto operator<=>(const FamilyKey&) const = default;
};

inline void validate(const FamilyKey& k) {
  if (k.power < 0) throw InvalidKey("negative y-power");
  switch (k.family) {
    case Family::X:
      if (k.index < 1) throw InvalidKey("X requires index >= 1");
      break;
    case Family::Y:
      if (k.index != 1) throw InvalidKey("Y is defined for index 1 only");
      break;
    case Family::C:
    case Family::D:
      if (k.index < 0) throw InvalidKey("C and D require index >= 0");
      break;
    default:
      if (k.index != 0) throw InvalidKey(std::string(family_name(k.family)) + " takes no index");
  }
}

enum class Var { x, y };

inline HandlebodyElement mul_basic(const HandlebodyElement& e, Var v) {
  return v == Var::x ? e.times_x() : e.times_y();
}

inline HandlebodyElement bar_involution(const HandlebodyElement& e) { return bar(e); }

// Eigenvalue of the S_j(y)-colored diagonal rules.
inline LaurentPoly lambda(int j) { return -tpow(2 * j + 2) - tpow(-2 * j - 2); }

// Recursive evaluation of every family with a shared memo table.
class Handlebody {
 public:
  HandlebodyElement eval(const FamilyKey& key) const {
    validate(key);
    return get(key, /*alt=*/false);
  }

  // X_i * y^k through the recursion that raises the y-power instead of the index.
  HandlebodyElement eval_alt_X(int i, int k) const {
    if (i < 1 || k < 0) throw InvalidKey("alternative X route needs i >= 1, k >= 0");
    return get({Family::X, i, k}, /*alt=*/true);
  }

  std::size_t cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

 private:
  using Key = std::tuple<FamilyKey, bool>;

  HandlebodyElement get(const FamilyKey& k, bool alt) const {
    Key key{k, alt};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    HandlebodyElement v = compute(k, alt);
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, v);
    return v;
  }

  HandlebodyElement X(int i, int k) const { return i == 0 ? get({Family::Y, 1, k}, false) : get({Family::X, i, k}, false); }
  HandlebodyElement Xalt(int i, int k) const { return i == 0 ? get({Family::Y, 1, k}, false) : get({Family::X, i, k}, true); }
  HandlebodyElement fam(Family f, int k, int idx = 0) const { return get({f, idx, k}, false); }

  // Applies a family linearly to a polynomial in y with integer coefficients.
  template <class Fn>
  static HandlebodyElement linear(const std::map<int, Int>& ypoly, Fn&& f) {
    HandlebodyElement r;
    for (const auto& [i, c] : ypoly) r += LaurentPoly(c) * f(i);
    return r;
  }

  // y^k = sum c_j S_j(y); family * S_j(y) = scale(j) * (base applied to S_j(y)).
  template <class Scale, class Base>
  static HandlebodyElement diagonal(int k, Scale&& scale, Base&& base) {
    HandlebodyElement r;
    for (const auto& [j, c] : power_in_S(k))
      r += (LaurentPoly(c) * scale(j)) * linear(S_power_coeffs(j), base);
    return r;
  }

  HandlebodyElement compute(const FamilyKey& key, bool alt) const {
    const int k = key.power;
    const HandlebodyElement x2yk = Poly2::monomial(1, 2, k);
    switch (key.family) {
      case Family::X: {
        int i = key.index;
        if (i == 1) {
          if (k == 0) return -tpow(4) * Poly2::y() - tpow(2) * Poly2::x(2);
          return tpow(4) * X(1, k - 1).times_y() + (tpow(-2) - tpow(6)) * fam(Family::Y, k - 1, 1) +
                 (LaurentPoly(2) - LaurentPoly::monomial(2, 4)) * Poly2::monomial(1, 2, k - 1);
        }
        if (!alt)
          return tpow(2) * X(i - 1, k).times_y() - tpow(4) * X(i - 2, k) - LaurentPoly::monomial(2, 2) * x2yk;
        return tpow(-2) * Xalt(i - 1, k + 1) - LaurentPoly::monomial(2, -2) * x2yk - tpow(-4) * Xalt(i - 2, k);
      }
      case Family::Y:
        if (k == 0) return -tpow(2) - tpow(-2);
        return tpow(-4) * fam(Family::Y, k - 1, 1).times_y() + (tpow(2) - tpow(-6)) * X(1, k - 1) +
               (LaurentPoly(2) - LaurentPoly::monomial(2, -4)) * Poly2::monomial(1, 2, k - 1);
      case Family::B:
        if (k == 0) return Poly2::x();
        return tpow(2) * fam(Family::B, k - 1).times_y() + (LaurentPoly(1) - tpow(-4)) * fam(Family::Bbar, k - 1);
      case Family::Bbar:
        if (k == 0) return Poly2::x();
        return tpow(-2) * fam(Family::Bbar, k - 1).times_y() + (LaurentPoly(1) - tpow(4)) * fam(Family::B, k - 1);
      case Family::A:
        return diagonal(k, lambda, [&](int i) { return fam(Family::B, i); });
      case Family::Abar:
        return diagonal(k, lambda, [&](int i) { return fam(Family::Bbar, i); });
      case Family::E:
      case Family::J:
        return diagonal(k, lambda, [](int i) { return Poly2::y(i); });
      case Family::F:
        return diagonal(k, [](int j) { return lambda(j) * lambda(j); }, [](int i) { return Poly2::y(i); });
      case Family::H:
        if (k == 0) return Poly2::y();
        return tpow(2) * fam(Family::H, k - 1).times_y() + (LaurentPoly(1) - tpow(-4)) * fam(Family::J, k - 1);
      case Family::G:
        return diagonal(k, lambda, [&](int i) { return fam(Family::H, i); });
      case Family::C: {
        int j = key.index;
        if (k == 0) return fam(Family::Bbar, j).times_x();
        return tpow(2) * fam(Family::C, k - 1, j + 1) + (LaurentPoly(1) - tpow(-4)) * fam(Family::D, k - 1, j);
      }
      case Family::D: {
        int j = key.index;
        if (k == 0) return tpow(-2) * fam(Family::Bbar, j).times_x() + (LaurentPoly(1) - tpow(4)) * fam(Family::E, j);
        return tpow(-2) * fam(Family::D, k - 1, j + 1) + (LaurentPoly(1) - tpow(4)) * fam(Family::C, k - 1, j);
      }
    }
    throw InvalidKey("unknown family");
  }

  mutable std::mutex mu_;
  mutable std::map<Key, HandlebodyElement> cache_;
};

inline const Handlebody& handlebody() {
  static const Handlebody h;
  return h;
}

inline HandlebodyElement family_eval(const FamilyKey& key) { return handlebody().eval(key); }
inline HandlebodyElement family_eval_alt_X(int i, int k) { return handlebody().eval_alt_X(i, k); }

// family * p(y), extended linearly over the powers of y in p (p has integer coefficients).
inline HandlebodyElement family_on(Family f, int index, const std::map<int, Int>& ypoly) {
  HandlebodyElement r;
  for (const auto& [i, c] : ypoly) r += LaurentPoly(c) * family_eval({f, index, i});
  return r;
}

}  // namespace skein
