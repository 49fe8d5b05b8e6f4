#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skein/boundary_action.hpp"
#include "skein/chebyshev.hpp"
#include "skein/handlebody.hpp"
#include "skein/io/fixtures.hpp"
#include "skein/io/printer.hpp"
#include "skein/knot_module.hpp"

namespace skein {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline std::size_t failures(const std::vector<CheckResult>& r) {
  std::size_t n = 0;
  for (const auto& c : r) n += !c.ok;
  return n;
}

struct AxiomTrial {
  Curve a, b;
  int n = 0, k = 0;
};

// a, b in {(p,q): 0 <= p <= 3, -5 <= q <= 5}, v = x^n y^k with n, k <= 3.
inline std::vector<AxiomTrial> axiom_trials(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> P(0, 3), Q(-5, 5), N(0, 3);
  std::vector<AxiomTrial> out;
  for (int i = 0; i < count; ++i) {
    AxiomTrial t;
    t.a = {P(rng), Q(rng)};
    t.b = {P(rng), Q(rng)};
    t.n = N(rng);
    t.k = N(rng);
    out.push_back(t);
  }
  return out;
}

inline std::string describe(const AxiomTrial& t) {
  return "a=(" + std::to_string(t.a.p) + "," + std::to_string(t.a.q) + ") b=(" + std::to_string(t.b.p) + "," +
         std::to_string(t.b.q) + ") v=x^" + std::to_string(t.n) + "*y^" + std::to_string(t.k);
}

inline std::vector<CheckResult> verify_axioms(const ActionEngine& engine, int trials, std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (const auto& t : axiom_trials(trials, seed)) {
    bool ok = axiom_check(TorusElement::curve(t.a.p, t.a.q), TorusElement::curve(t.b.p, t.b.q),
                          KnotModuleElement::basis(t.n, t.k), engine);
    out.push_back({"axiom " + describe(t), ok, ok ? "" : "act(a*b, v) != act(a, act(b, v))"});
  }
  return out;
}

inline std::vector<CheckResult> verify_recursions() {
  std::vector<CheckResult> out;
  auto x = UnivariatePoly::var();
  bool cheb_ok = true;
  for (int n = 1; n < 20; ++n)
    cheb_ok = cheb_ok && cheb_T(n + 1) == x * cheb_T(n) - cheb_T(n - 1) && cheb_S(n + 1) == x * cheb_S(n) - cheb_S(n - 1);
  out.push_back({"chebyshev recurrences n <= 20", cheb_ok, ""});

  bool prod_ok = true;
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n) {
      ChebCoeffs want;
      for (int i : S_product(m, n)) want[i] = 1;
      prod_ok = prod_ok && power_to_S(cheb_S(m) * cheb_S(n)) == want;
    }
  out.push_back({"S_product vs power basis m, n <= 10", prod_ok, ""});

  for (int i = 2; i <= 4; ++i)
    for (int k = 0; k <= 6; ++k)
      out.push_back({"X_" + std::to_string(i) + "*y^" + std::to_string(k) + " index route = power route",
                     family_eval({Family::X, i, k}) == family_eval_alt_X(i, k), ""});

  const KnotModule& M = knot_module();
  for (int j = 1; j <= 4; ++j)
    for (int k = 0; k <= 6; ++k)
      out.push_back({"X_" + std::to_string(j) + "*S_" + std::to_string(k) + "(y) power route = S-basis scheme",
                     M.xj_action(j, k) == M.xj_action_scheme(j, k), ""});

  for (int k = 0; k <= 2; ++k) {
    Poly2 ident = family_eval({Family::X, 4, k}) + tpow(-4) * family_eval({Family::X, 3, k}) + tpow(-2) * Poly2::monomial(1, 2, k);
    out.push_back({"reduction rules satisfy the X_4 relation at k=" + std::to_string(k), reduce(ident).is_zero(), ""});
  }
  return out;
}

inline std::vector<CheckResult> verify_ladder(const ActionEngine& engine) {
  std::vector<CheckResult> out;
  constexpr int kTop = 6;
  for (int k = 0; k <= KnotModuleElement::kMaxY; ++k) {
    KnotModuleElement hi = engine.ladder(kTop, 0, k), lo = engine.ladder(kTop - 1, 0, k);
    std::map<int, KnotModuleElement> down{{kTop, hi}, {kTop - 1, lo}};
    for (int q = kTop - 2; q >= -6; --q) down[q] = ActionEngine::ladder_down(down[q + 1], down[q + 2]);
    for (int q = -6; q <= 3; ++q)
      out.push_back({"ladder F_" + std::to_string(q) + "(y^" + std::to_string(k) + ") direct = overshoot and return",
                     engine.ladder(q, 0, k) == down[q], ""});
  }
  return out;
}

inline std::vector<CheckResult> verify_mirrors() {
  std::vector<CheckResult> out;
  for (int k = 0; k <= 6; ++k) {
    out.push_back({"bar(B*y^" + std::to_string(k) + ") = Bbar*y^" + std::to_string(k),
                   bar_involution(family_eval({Family::B, 0, k})) == family_eval({Family::Bbar, 0, k}), ""});
    out.push_back({"bar(A*y^" + std::to_string(k) + ") = Abar*y^" + std::to_string(k),
                   bar_involution(family_eval({Family::A, 0, k})) == family_eval({Family::Abar, 0, k}), ""});
  }
  return out;
}

// A mismatch on a fixture flagged suspected-typo is the expected outcome and is not a failure.
inline std::vector<CheckResult> verify_fixtures() {
  std::vector<CheckResult> out;
  for (const char* dir : {"handlebody", "knot"})
    for (const auto& r : check_fixture_dir(data_dir() / "fixtures" / dir)) {
      bool typo = r.fixture.flag == "suspected-typo";
      std::string detail = r.match ? "match" : "mismatch, derived - printed = " + format_poly2(r.difference, Basis::Chebyshev);
      out.push_back({std::string(dir) + " " + r.fixture.name + " [" + r.fixture.flag + "]", r.match || typo, detail});
    }
  GeneratorActionTable derived = derived_action_table();
  for (const auto& pt : {printed_alpha(), printed_beta()}) {
    DiffReport rep = compare_tables(table_from_actions(derived, pt.table.kind), pt.table, pt.flags);
    const char* label = pt.table.kind == TableKind::Alpha ? "alpha" : "beta";
    for (const auto& e : rep.entries) {
      bool typo = e.flag == "suspected-typo";
      std::string detail = e.match ? "match" : "mismatch, derived - printed = " + format_entry(e.difference, rep.kind);
      out.push_back({std::string(label) + "[" + std::to_string(e.k) + "," + std::to_string(e.j) + "] [" + e.flag + "]",
                     e.match || typo, detail});
    }
  }
  return out;
}

}  // namespace skein
