#pragma once

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "skein/errors.hpp"
#include "skein/handlebody.hpp"
#include "skein/knot_module.hpp"
#include "skein/torus.hpp"

namespace skein {

enum class Generator { G1m3, G1m2 };  // (1,-3)_T and (1,-2)_T

inline int generator_q(Generator g) { return g == Generator::G1m3 ? -3 : -2; }
inline std::string generator_name(Generator g) { return g == Generator::G1m3 ? "(1,-3)" : "(1,-2)"; }

// How the constant of the x*y^k bracket in the (1,-3) formula is taken.
// Corrected uses 3t^-1, which is what the sum of the six smoothing terms gives;
// AsPrinted uses the combined display's 2t^-1.
enum class Assembly { Corrected, AsPrinted };

// (1,-3)_T . y^k, frame factor included.
inline KnotModuleElement action_1m3_on_power(int k, Assembly mode = Assembly::Corrected) {
  const auto A = family_eval({Family::A, 0, k});
  const auto Ab = family_eval({Family::Abar, 0, k});
  const auto X3 = family_eval({Family::X, 3, k});
  const LaurentPoly c0 = LaurentPoly::monomial(-2, 3) + LaurentPoly::monomial(mode == Assembly::Corrected ? 3 : 2, -1);
  Poly2 bracket = tpow(5) * Sy(3) + LaurentPoly::monomial(2, 3) * Sy(2) +
                  (-tpow(5) + LaurentPoly::monomial(2, 1)) * Sy(1) + Poly2(c0);
  Poly2 e = tpow(-3) * X3.times_x() + (tpow(7) * Sy(3) + tpow(5) * Sy(2)) * A +
            (tpow(3) * Poly2::y() + tpow(5) * Sy(2)) * Ab + bracket * Poly2::monomial(1, 1, k);
  return reduce(e);
}

// (1,-2)_T . y^k, frame factor included.
inline KnotModuleElement action_1m2_on_power(int k) {
  const KnotModule& M = knot_module();
  KnotModuleElement mod = (tpow(8) - tpow(4)) * M.xj_power(4, k + 1) +
                          (tpow(6) + LaurentPoly::monomial(2, -2) - LaurentPoly::monomial(3, 2)) * M.xj_power(3, k) +
                          (-tpow(4) + LaurentPoly(1)) * M.xj_power(2, k + 1);
  const auto A = family_eval({Family::A, 0, k});
  const auto Ab = family_eval({Family::Abar, 0, k});
  const auto x = Poly2::x();
  const auto y = Poly2::y();
  const auto x2 = Poly2::x(2);
  Poly2 e = tpow(-2) * family_eval({Family::Y, 1, k});
  e += (tpow(6) * Poly2::y(2) + (-tpow(8) + tpow(4)) * y + Poly2(-LaurentPoly::monomial(3, 6) + tpow(2))) * x * A;
  e += (tpow(4) * y + Poly2(tpow(2) - tpow(6))) * x * Ab;
  e += family_eval({Family::C, 0, k});
  e += (-tpow(8) * x2 - Poly2(tpow(4))) * family_eval({Family::F, 0, k});
  e += (-tpow(10) * y - Poly2(tpow(8))) * x2 * family_eval({Family::G, 0, k});
  e += tpow(6) * Poly2::monomial(1, 2, k + 3) + LaurentPoly::monomial(3, 4) * Poly2::monomial(1, 2, k + 2) +
       (LaurentPoly::monomial(4, 2) - LaurentPoly::monomial(2, 6)) * Poly2::monomial(1, 2, k + 1) +
       (LaurentPoly::monomial(-3, 4) + LaurentPoly(3)) * Poly2::monomial(1, 2, k);
  return mod + reduce(e);
}

inline KnotModuleElement action_on_power(Generator g, int k, Assembly mode = Assembly::Corrected) {
  if (k < 0 || k > 3) throw InvalidKey("generator action defined for 0 <= k <= 3");
  return g == Generator::G1m3 ? action_1m3_on_power(k, mode) : action_1m2_on_power(k);
}

template <class Fn>
KnotModuleElement on_S_k(int k, Fn&& on_power) {
  KnotModuleElement r;
  for (const auto& [i, c] : S_power_coeffs(k)) r += LaurentPoly(c) * on_power(i);
  return r;
}

inline KnotModuleElement derive_action_1m3(int k, Assembly mode = Assembly::Corrected) {
  return on_S_k(k, [&](int i) { return action_1m3_on_power(i, mode); });
}
inline KnotModuleElement derive_action_1m2(int k) {
  return on_S_k(k, [](int i) { return action_1m2_on_power(i); });
}

enum class Provenance { Derived, Printed };

// Actions of the two generators on S_k(y), k = 0..3.
struct GeneratorActionTable {
  Provenance provenance = Provenance::Derived;
  std::map<std::pair<Generator, int>, KnotModuleElement> on_S;
};

inline GeneratorActionTable derived_action_table(Assembly mode = Assembly::Corrected) {
  GeneratorActionTable t;
  for (int k = 0; k <= 3; ++k) {
    t.on_S[{Generator::G1m3, k}] = derive_action_1m3(k, mode);
    t.on_S[{Generator::G1m2, k}] = derive_action_1m2(k);
  }
  return t;
}

enum class TableKind { Alpha, Beta };

inline Generator table_generator(TableKind k) { return k == TableKind::Alpha ? Generator::G1m3 : Generator::G1m2; }

// Prefactor stripped from the S_j(y) coefficient of the action on S_k(y).
inline LaurentPoly table_prefactor(TableKind kind, int k, int j) {
  return kind == TableKind::Alpha ? tpow(2 * k + 2 * j - 1) : tpow(-2 * k - 2 * j);
}

// Per (k,j): Chebyshev x-index -> coefficient in t (a polynomial in q = t^4 when well formed).
using TableEntry = std::map<int, LaurentPoly>;

struct CoefficientTable {
  TableKind kind = TableKind::Alpha;
  std::map<std::pair<int, int>, TableEntry> entries;
};

inline CoefficientTable table_from_actions(const GeneratorActionTable& t, TableKind kind) {
  CoefficientTable out;
  out.kind = kind;
  Generator g = table_generator(kind);
  for (int k = 0; k <= 3; ++k) {
    ChebView ch = t.on_S.at({g, k}).cheb();
    for (int j = 0; j <= 3; ++j) out.entries[{k, j}];
    for (const auto& [ab, c] : ch) {
      const auto [a, j] = ab;
      out.entries[{k, j}][a] = div_by_unit(c, table_prefactor(kind, k, j));
    }
  }
  return out;
}

inline KnotModuleElement entry_to_element(const TableEntry& e, TableKind kind, int k, int j) {
  Poly2 px;
  for (const auto& [a, c] : e) px += c * Sx(a);
  return KnotModuleElement(table_prefactor(kind, k, j) * (px * Sy(j)));
}

inline GeneratorActionTable actions_from_tables(const CoefficientTable& alpha, const CoefficientTable& beta) {
  GeneratorActionTable t;
  t.provenance = Provenance::Printed;
  for (const CoefficientTable* tab : {&alpha, &beta}) {
    Generator g = table_generator(tab->kind);
    for (int k = 0; k <= 3; ++k) {
      KnotModuleElement v;
      for (int j = 0; j <= 3; ++j) {
        auto it = tab->entries.find({k, j});
        if (it != tab->entries.end()) v += entry_to_element(it->second, tab->kind, k, j);
      }
      t.on_S[{g, k}] = v;
    }
  }
  return t;
}

struct DiffEntry {
  int k = 0;
  int j = 0;
  bool match = false;
  std::string flag = "expected-match";
  TableEntry derived, printed, difference;
};

struct DiffReport {
  std::string generator;
  TableKind kind = TableKind::Alpha;
  std::vector<DiffEntry> entries;

  std::size_t matches() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.match;
    return n;
  }
};

inline TableEntry entry_sub(TableEntry a, const TableEntry& b) {
  for (const auto& [i, c] : b) {
    a[i] -= c;
    if (a[i].is_zero()) a.erase(i);
  }
  return a;
}

// flags: optional (k,j) -> status flag of the printed entry.
inline DiffReport compare_tables(const CoefficientTable& derived, const CoefficientTable& printed,
                                 const std::map<std::pair<int, int>, std::string>& flags = {}) {
  DiffReport r;
  r.kind = derived.kind;
  r.generator = generator_name(table_generator(derived.kind));
  for (int k = 0; k <= 3; ++k)
    for (int j = 0; j <= 3; ++j) {
      DiffEntry e;
      e.k = k;
      e.j = j;
      if (auto it = derived.entries.find({k, j}); it != derived.entries.end()) e.derived = it->second;
      if (auto it = printed.entries.find({k, j}); it != printed.entries.end()) e.printed = it->second;
      if (auto it = flags.find({k, j}); it != flags.end()) e.flag = it->second;
      e.difference = entry_sub(e.derived, e.printed);
      e.match = e.difference.empty();
      r.entries.push_back(std::move(e));
    }
  return r;
}

// (q0,k) -> (1,q0)_T . y^k for q0 in {-3,-2}.
using Seeds = std::map<std::pair<int, int>, KnotModuleElement>;

inline Seeds seeds_from_table(const GeneratorActionTable& t, int max_k = 3) {
  Seeds s;
  for (Generator g : {Generator::G1m3, Generator::G1m2})
    for (int k = 0; k <= max_k; ++k) {
      KnotModuleElement v;
      for (const auto& [j, c] : power_in_S(k)) {
        auto it = t.on_S.find({g, j});
        if (it == t.on_S.end()) throw SeedsMissing("no action of " + generator_name(g) + " on S_" + std::to_string(j) + "(y)");
        v += LaurentPoly(c) * it->second;
      }
      s[{generator_q(g), k}] = v;
    }
  return s;
}

inline Seeds derived_seeds(Assembly mode = Assembly::Corrected) {
  Seeds s;
  for (Generator g : {Generator::G1m3, Generator::G1m2})
    for (int k = 0; k <= 3; ++k) s[{generator_q(g), k}] = action_on_power(g, k, mode);
  return s;
}

// Action of the torus skein algebra on the module, built from the two generator seeds,
// the (0,1)_T commutation identities and the s = 0 product-to-sum peel.
class ActionEngine {
 public:
  explicit ActionEngine(Seeds seeds, int max_k = KnotModuleElement::kMaxY) : seeds_(std::move(seeds)), max_k_(max_k) {
    for (int q0 : {-3, -2})
      for (int k = 0; k <= max_k_; ++k)
        if (!seeds_.count({q0, k}))
          throw SeedsMissing("seed (1," + std::to_string(q0) + ") on y^" + std::to_string(k) + " missing");
    if (const char* cap = std::getenv("SKEIN_CACHE_LIMIT")) cache_limit_ = std::strtoull(cap, nullptr, 10);
  }

  KnotModuleElement act(const TorusElement& a, const KnotModuleElement& v) const {
    KnotModuleElement r = a.empty_coeff() * v;
    for (const auto& [c, coeff] : a.curves()) r += coeff * act_curve(c.p, c.q, v);
    return r;
  }

  KnotModuleElement act_curve(int p, int q, const KnotModuleElement& v) const {
    KnotModuleElement r;
    for (const auto& [e, c] : v.poly().terms()) r += c * basis_action(p, q, e.first, e.second);
    return r;
  }

  // (p,q)_T . x^n y^k
  KnotModuleElement basis_action(int p, int q, int n, int k) const {
    Canonical cn = canonicalize(p, q);
    if (cn.empty_times2) return KnotModuleElement::basis(n, k, 2);
    p = cn.curve.p;
    q = cn.curve.q;
    if (k > max_k_) throw SeedsMissing("no seeds for y^" + std::to_string(k));
    if (p == 0) {
      KnotModuleElement r;
      const UnivariatePoly Tq = cheb_T(q);
      for (const auto& [d, c] : Tq.coeffs()) r += KnotModuleElement::basis(n + d, k, c);
      return r;
    }
    if (p == 1) return ladder(q, n, k);
    Key key{p, q, n, k};
    if (auto hit = lookup(key)) return *hit;
    // (p,q)_T = t^-q [ (1,0)_T (p-1,q)_T - t^-q (p-2,q)_T ]
    KnotModuleElement inner = act_curve(1, 0, basis_action(p - 1, q, n, k));
    KnotModuleElement r = tpow(-q) * (inner - tpow(-q) * basis_action(p - 2, q, n, k));
    store(key, r);
    return r;
  }

  // F_q(x^n y^k) = (1,q)_T . x^n y^k
  KnotModuleElement ladder(int q, int n, int k) const {
    if (n == 0 && (q == -3 || q == -2)) return seeds_.at({q, k});
    Key key{1, q, n, k};
    if (auto hit = lookup(key)) return *hit;
    KnotModuleElement r;
    if (n > 0)
      r = tpow(1) * ladder(q + 1, n - 1, k) + tpow(-1) * ladder(q - 1, n - 1, k);
    else if (q > -2)
      r = ladder_up(ladder(q - 1, 0, k), ladder(q - 2, 0, k));
    else
      r = ladder_down(ladder(q + 1, 0, k), ladder(q + 2, 0, k));
    store(key, r);
    return r;
  }

  // F_{q+1} = t x F_q - t^2 F_{q-1}
  static KnotModuleElement ladder_up(const KnotModuleElement& Fq, const KnotModuleElement& Fqm1) {
    return tpow(1) * Fq.times_x() - tpow(2) * Fqm1;
  }
  // F_{q-1} = t^-1 x F_q - t^-2 F_{q+1}
  static KnotModuleElement ladder_down(const KnotModuleElement& Fq, const KnotModuleElement& Fqp1) {
    return tpow(-1) * Fq.times_x() - tpow(-2) * Fqp1;
  }

  const Seeds& seeds() const { return seeds_; }

  std::size_t cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

 private:
  using Key = std::tuple<int, int, int, int>;

  std::optional<KnotModuleElement> lookup(const Key& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end()) return std::nullopt;
    return it->second;
  }
  void store(const Key& key, const KnotModuleElement& v) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (cache_limit_ && cache_.size() >= *cache_limit_) return;
    cache_.emplace(key, v);
  }

  Seeds seeds_;
  int max_k_;
  std::optional<std::size_t> cache_limit_;
  mutable std::mutex mu_;
  mutable std::map<Key, KnotModuleElement> cache_;
};

inline KnotModuleElement act(const TorusElement& a, const KnotModuleElement& v, const ActionEngine& engine) {
  return engine.act(a, v);
}

inline bool axiom_check(const TorusElement& a, const TorusElement& b, const KnotModuleElement& v,
                        const ActionEngine& engine) {
  return engine.act(mul(a, b), v) == engine.act(a, engine.act(b, v));
}

}  // namespace skein
