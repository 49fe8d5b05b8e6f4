#pragma once

#include <cstdlib>
#include <map>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

// Polynomial in a single curve variable with LaurentPoly coefficients.
class UnivariatePoly {
 public:
  using Coeffs = std::map<int, LaurentPoly>;

  UnivariatePoly() = default;
  static UnivariatePoly constant(const LaurentPoly& c) { return monomial(c, 0); }
  static UnivariatePoly monomial(const LaurentPoly& c, int d) {
    UnivariatePoly p;
    p.add(d, c);
    return p;
  }
  static UnivariatePoly var() { return monomial(1, 1); }

  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  LaurentPoly coeff(int d) const {
    auto it = c_.find(d);
    return it == c_.end() ? LaurentPoly() : it->second;
  }

  void add(int d, const LaurentPoly& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c_.try_emplace(d, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  UnivariatePoly times_var(int k = 1) const {
    UnivariatePoly r;
    for (const auto& [d, v] : c_) r.c_.emplace_hint(r.c_.end(), d + k, v);
    return r;
  }

  UnivariatePoly& operator+=(const UnivariatePoly& o) {
    for (const auto& [d, v] : o.c_) add(d, v);
    return *this;
  }
  UnivariatePoly& operator-=(const UnivariatePoly& o) {
    for (const auto& [d, v] : o.c_) add(d, -v);
    return *this;
  }
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly r;
    for (const auto& [da, va] : a.c_)
      for (const auto& [db, vb] : b.c_) r.add(da + db, va * vb);
    return r;
  }
  friend UnivariatePoly operator*(const LaurentPoly& s, const UnivariatePoly& p) {
    UnivariatePoly r;
    for (const auto& [d, v] : p.c_) r.add(d, s * v);
    return r;
  }
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.c_ == b.c_; }

 private:
  Coeffs c_;
};

namespace detail {

// Integer coefficient rows of T_n or S_n for n < N, built once.
inline std::vector<std::vector<Int>> cheb_rows(Int seed0, int N) {
  std::vector<std::vector<Int>> rows;
  rows.push_back({seed0});
  rows.push_back({0, 1});
  for (int n = 2; n < N; ++n) {
    std::vector<Int> r(n + 1, 0);
    for (std::size_t d = 0; d < rows[n - 1].size(); ++d) r[d + 1] += rows[n - 1][d];
    for (std::size_t d = 0; d < rows[n - 2].size(); ++d) r[d] -= rows[n - 2][d];
    rows.push_back(std::move(r));
  }
  return rows;
}

inline const std::vector<Int>& cheb_row(bool first_kind, int n) {
  constexpr int kCached = 64;
  static const auto t_rows = cheb_rows(2, kCached);
  static const auto s_rows = cheb_rows(1, kCached);
  if (n < kCached) return first_kind ? t_rows[n] : s_rows[n];
  thread_local std::vector<Int> scratch;
  scratch = cheb_rows(first_kind ? 2 : 1, n + 1)[n];
  return scratch;
}

inline UnivariatePoly row_to_poly(const std::vector<Int>& row) {
  UnivariatePoly p;
  for (std::size_t d = 0; d < row.size(); ++d) p.add(static_cast<int>(d), LaurentPoly(row[d]));
  return p;
}

}  // namespace detail

// T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1}
inline UnivariatePoly cheb_T(int n) { return detail::row_to_poly(detail::cheb_row(true, n)); }

// S_0 = 1, S_1 = x, S_{n+1} = x S_n - S_{n-1}
inline UnivariatePoly cheb_S(int n) { return detail::row_to_poly(detail::cheb_row(false, n)); }

using ChebCoeffs = std::map<int, LaurentPoly>;

// S_n is monic, so the top power can be peeled off one degree at a time.
inline ChebCoeffs power_to_S(UnivariatePoly p) {
  ChebCoeffs out;
  while (!p.is_zero()) {
    int d = p.degree();
    LaurentPoly c = p.coeff(d);
    out.emplace(d, c);
    const auto& row = detail::cheb_row(false, d);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) p.add(static_cast<int>(i), -(c * LaurentPoly(row[i])));
  }
  return out;
}

inline UnivariatePoly S_to_power(const ChebCoeffs& c) {
  UnivariatePoly p;
  for (const auto& [n, v] : c) {
    const auto& row = detail::cheb_row(false, n);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) p.add(static_cast<int>(i), v * LaurentPoly(row[i]));
  }
  return p;
}

// Integer coefficients s_i with S_n = sum s_i x^i.
inline std::map<int, Int> S_power_coeffs(int n) {
  std::map<int, Int> out;
  const auto& row = detail::cheb_row(false, n);
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) out.emplace(static_cast<int>(i), row[i]);
  return out;
}

// Integer coefficients c_j with x^k = sum c_j S_j.
inline std::map<int, Int> power_in_S(int k) {
  std::map<int, Int> out;
  for (const auto& [j, c] : power_to_S(UnivariatePoly::monomial(1, k))) out.emplace(j, c.coeff(0));
  return out;
}

// S_m S_n = S_{m+n} + S_{m+n-2} + ... + S_{|m-n|}
inline std::vector<int> S_product(int m, int n) {
  std::vector<int> r;
  for (int k = m + n; k >= std::abs(m - n); k -= 2) r.push_back(k);
  return r;
}

}  // namespace skein
