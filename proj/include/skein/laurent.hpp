#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

using Int = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in t with big-integer coefficients, stored as (exponent, coefficient)
// pairs sorted by exponent. Zero coefficients are never stored, so structural equality is value equality.
class LaurentPoly {
 public:
  using Terms = std::vector<std::pair<int, Int>>;

  LaurentPoly() = default;
  LaurentPoly(int c) { add_term(0, Int(c)); }  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Int& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Int& c, int e) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }
  static LaurentPoly t(int e) { return monomial(Int(1), e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exp() const { return terms_.front().first; }
  int max_exp() const { return terms_.back().first; }

  Int coeff(int e) const {
    auto it = find(e);
    return it != terms_.end() && it->first == e ? it->second : Int(0);
  }

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.front().second;
    return c == 1 || c == -1;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0); }

  void add_term(int e, const Int& c) {
    if (c == 0) return;
    if (terms_.empty() || terms_.back().first < e) {
      terms_.emplace_back(e, c);
      return;
    }
    auto it = find(e);
    if (it != terms_.end() && it->first == e) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.emplace(it, e, c);
    }
  }

  // this * t^e
  LaurentPoly shifted(int e) const {
    LaurentPoly r = *this;
    for (auto& term : r.terms_) term.first += e;
    return r;
  }

  // t -> t^-1
  LaurentPoly reflected() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return merge(o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return merge(o, true); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& term : a.terms_) term.second = -term.second;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      const auto& [em, cm] = a.terms_.size() == 1 ? a.terms_.front() : b.terms_.front();
      const LaurentPoly& other = a.terms_.size() == 1 ? b : a;
      r.terms_.reserve(other.terms_.size());
      for (const auto& [e, c] : other.terms_) r.terms_.emplace_back(e + em, c * cm);
      return r;
    }
    const int lo = a.min_exp() + b.min_exp();
    std::vector<Int> dense(static_cast<std::size_t>(a.max_exp() + b.max_exp() - lo + 1));
    Int prod;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        multiply(prod, ca, cb);
        dense[static_cast<std::size_t>(ea + eb - lo)] += prod;
      }
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (dense[i] != 0) r.terms_.emplace_back(static_cast<int>(i) + lo, std::move(dense[i]));
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms::iterator find(int e) {
    return std::lower_bound(terms_.begin(), terms_.end(), e, [](const auto& term, int x) { return term.first < x; });
  }
  Terms::const_iterator find(int e) const {
    return std::lower_bound(terms_.begin(), terms_.end(), e, [](const auto& term, int x) { return term.first < x; });
  }

  LaurentPoly& merge(const LaurentPoly& o, bool negate) {
    if (o.terms_.empty()) return *this;
    if (o.terms_.size() == 1) {
      add_term(o.terms_.front().first, negate ? Int(-o.terms_.front().second) : o.terms_.front().second);
      return *this;
    }
    Terms out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        out.emplace_back(j->first, negate ? Int(-j->second) : j->second);
        ++j;
      } else {
        if (negate)
          i->second -= j->second;
        else
          i->second += j->second;
        if (i->second != 0) out.push_back(std::move(*i));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  Terms terms_;
};

inline LaurentPoly tpow(int e) { return LaurentPoly::t(e); }

inline LaurentPoly bar(const LaurentPoly& a) { return a.reflected(); }

inline LaurentPoly div_by_unit(const LaurentPoly& a, const LaurentPoly& u) {
  if (!u.is_unit()) throw NotAUnit();
  const auto& [e, c] = *u.terms().begin();
  LaurentPoly r = a.shifted(-e);
  return c == 1 ? r : -r;
}

// Exponents divided by 4: reads a polynomial in t as a polynomial in q = t^4.
inline LaurentPoly to_q(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms()) {
    if (e % 4 != 0) throw NotInQ(e);
    r.add_term(e / 4, c);
  }
  return r;
}

inline LaurentPoly from_q(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms()) r.add_term(4 * e, c);
  return r;
}

inline bool in_q(const LaurentPoly& a) {
  for (const auto& [e, c] : a.terms())
    if (e % 4 != 0) return false;
  return true;
}

namespace detail {

inline std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = n < 0 ? "⁻" : "";
  for (char ch : std::to_string(n < 0 ? -n : n)) s += digits[ch - '0'];
  return s;
}

inline std::string power(const std::string& var, int e, bool pretty) {
  if (e == 1) return var;
  return var + (pretty ? superscript(e) : "^" + std::to_string(e));
}

// Monomial |c| var^e without sign.
inline std::string monomial_text(const Int& absc, const std::string& var, int e, bool pretty) {
  if (e == 0) return absc.str();
  std::string v = power(var, e, pretty);
  if (absc == 1) return v;
  return absc.str() + (pretty ? "" : "*") + v;
}

}  // namespace detail

// Text form, exponents descending: "-t^4 - 1", "2*t^-3 + t".
// Terms whose exponent is divisible by 4 are written in q when q_mode is set and the
// remaining ones keep t, so mixed printed data still round-trips.
inline std::string to_text(const LaurentPoly& a, const std::string& var = "t", bool pretty = false,
                           bool q_mode = false) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    Int absc = neg ? Int(-c) : c;
    std::string body;
    if (q_mode && e % 4 == 0)
      body = detail::monomial_text(absc, "q", e / 4, pretty);
    else
      body = detail::monomial_text(absc, var, e, pretty);
    if (first)
      s += (neg ? "-" : "") + body;
    else
      s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

inline std::string to_pretty(const LaurentPoly& a, const std::string& var = "t") {
  return to_text(a, var, true);
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << to_text(a); }

}  // namespace skein
