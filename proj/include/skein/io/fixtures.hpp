#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "skein/boundary_action.hpp"
#include "skein/handlebody.hpp"
#include "skein/io/json_io.hpp"
#include "skein/io/parser.hpp"
#include "skein/knot_module.hpp"

#ifndef SKEIN_DEFAULT_DATA_DIR
#define SKEIN_DEFAULT_DATA_DIR "data"
#endif

namespace skein {

inline std::filesystem::path data_dir() {
  if (const char* d = std::getenv("SKEIN_DATA_DIR")) return d;
  return SKEIN_DEFAULT_DATA_DIR;
}

// One printed formula with its expected status.
struct Fixture {
  std::string id;
  std::string name;
  std::string kind;  // family | reduction | x4-module | xj | x4-relation
  std::string flag;  // expected-match | suspected-typo
  std::string value;
  json meta;
};

inline json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw SkeinError("cannot open " + p.string());
  return json::parse(in);
}

inline std::vector<Fixture> load_fixtures(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const auto& f : files) {
    json j = read_json(f);
    out.push_back({f.stem().string(), j.at("name"), j.at("kind"), j.at("flag"), j.at("value"), j});
  }
  return out;
}

struct FixtureResult {
  Fixture fixture;
  bool match = false;
  Poly2 derived, printed, difference;
};

inline FixtureResult check_fixture(const Fixture& f) {
  FixtureResult r{f};
  const json& m = f.meta;
  if (f.kind == "x4-relation") {
    // X_4*S_k(y) + t^-4 X_3*S_k(y) = -c x^2 S_k(y); read c off k = 0, then require it for k <= 3.
    const KnotModule& M = knot_module();
    auto lhs = [&](int k) { return M.xj_action(4, k) + tpow(-4) * M.xj_action(3, k); };
    LaurentPoly c = -lhs(0).poly().coeff(2, 0);
    for (int k = 0; k <= 3; ++k)
      if (!(lhs(k) == reduce(-c * (Poly2::x(2) * Sy(k))))) throw InvariantViolation("X_4 relation fails at k=" + std::to_string(k));
    r.derived = Poly2(c);
    r.printed = Poly2(parse_laurent(f.value));
  } else {
    r.printed = parse_poly2(f.value);
    if (f.kind == "family")
      r.derived = family_eval({*family_from_name(m.at("family")), m.at("index"), m.at("power")});
    else if (f.kind == "reduction")
      r.derived = derive_reductions().rule(m.at("degree")).poly();
    else if (f.kind == "x4-module")
      r.derived = derive_reductions().X4.poly();
    else if (f.kind == "xj")
      r.derived = xj_action(m.at("j"), m.at("k")).poly();
    else
      throw SkeinError("unknown fixture kind " + f.kind);
  }
  r.difference = r.derived - r.printed;
  r.match = r.difference.is_zero();
  return r;
}

struct PrintedTable {
  CoefficientTable table;
  std::map<std::pair<int, int>, std::string> flags;
  std::map<std::pair<int, int>, std::string> source;  // transcription as printed
};

inline PrintedTable load_printed_table(const std::filesystem::path& file) {
  json j = read_json(file);
  PrintedTable pt;
  pt.table.kind = j.at("table") == "alpha" ? TableKind::Alpha : TableKind::Beta;
  for (const auto& e : j.at("entries")) {
    std::pair<int, int> kj{e.at("k"), e.at("j")};
    Poly2 v = parse_poly2(e.at("value").get<std::string>());
    if (v.y_degree() > 0) throw ParseError(0, {"polynomial in x"}, "y in table entry");
    TableEntry te;
    for (const auto& [ab, c] : to_cheb(v)) te[ab.first] = c;
    pt.table.entries[kj] = te;
    pt.flags[kj] = e.at("flag");
    pt.source[kj] = e.at("value");
  }
  return pt;
}

inline PrintedTable printed_alpha() { return load_printed_table(data_dir() / "theorems" / "theorem1.json"); }
inline PrintedTable printed_beta() { return load_printed_table(data_dir() / "theorems" / "theorem2.json"); }

inline std::vector<FixtureResult> check_fixture_dir(const std::filesystem::path& dir) {
  std::vector<FixtureResult> out;
  for (const auto& f : load_fixtures(dir)) out.push_back(check_fixture(f));
  return out;
}

}  // namespace skein
