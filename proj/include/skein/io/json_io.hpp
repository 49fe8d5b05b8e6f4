#pragma once

#include <json.hpp>

#include <string>

#include "skein/boundary_action.hpp"
#include "skein/errors.hpp"
#include "skein/io/printer.hpp"
#include "skein/laurent.hpp"
#include "skein/poly2.hpp"
#include "skein/torus.hpp"

namespace skein {

using json = nlohmann::ordered_json;

// [[exponent, "coefficient"], ...] with exponents descending.
inline json to_json(const LaurentPoly& p) {
  json a = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) a.push_back({it->first, it->second.str()});
  return a;
}

inline LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw ParseError(0, {"array of [exponent, coefficient]"}, j.type_name());
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
      throw ParseError(0, {"[exponent, coefficient]"}, term.dump());
    Int c = term[1].is_string() ? Int(term[1].get<std::string>()) : Int(term[1].get<long long>());
    p.add_term(term[0].get<int>(), c);
  }
  return p;
}

inline json to_json(const Poly2& p, Basis basis) {
  json terms = json::array();
  if (basis == Basis::Power) {
    for (const auto& [e, c] : p.terms()) terms.push_back({{"m", e.first}, {"n", e.second}, {"coeff", to_json(c)}});
    return terms;
  }
  for (const auto& [e, c] : to_cheb(p)) terms.push_back({{"a", e.first}, {"b", e.second}, {"coeff", to_json(c)}});
  return json{{"basis", "chebyshev"}, {"terms", terms}};
}

inline Poly2 poly2_from_json(const json& j) {
  Poly2 p;
  if (j.is_object() && j.value("basis", "") == "chebyshev") {
    ChebView v;
    for (const auto& t : j.at("terms"))
      v = cheb_add(v, ChebView{{{t.at("a").get<int>(), t.at("b").get<int>()}, laurent_from_json(t.at("coeff"))}});
    return from_cheb(v);
  }
  for (const auto& t : j) p.add(t.at("m").get<int>(), t.at("n").get<int>(), laurent_from_json(t.at("coeff")));
  return p;
}

inline json to_json(const TorusElement& a) {
  json curves = json::array();
  for (const auto& [c, coeff] : a.curves()) curves.push_back({{"p", c.p}, {"q", c.q}, {"coeff", to_json(coeff)}});
  return json{{"empty", to_json(a.empty_coeff())}, {"curves", curves}};
}

inline json to_json(const DiffReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"k", e.k},
                       {"j", e.j},
                       {"status", e.match ? "match" : "mismatch"},
                       {"flag", e.flag},
                       {"derived", format_entry(e.derived, r.kind)},
                       {"printed", format_entry(e.printed, r.kind)},
                       {"difference", format_entry(e.difference, r.kind)}});
  return json{{"generator", r.generator}, {"authoritative", "derived"}, {"entries", entries}};
}

}  // namespace skein
