// skein: command-line front end for the torus action on the 5_2 complement skein module.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <regex>
#include <string>

#include "skein/skein.hpp"

namespace {

using namespace skein;

struct Options {
  std::string data;
  // act
  std::string skein_expr, on_expr, basis = "auto", format = "pretty", seeds = "derived", assembly = "corrected";
  // mul
  std::string mul_a, mul_b;
  // derive
  std::string target;
  bool compare = false;
  // verify
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 7;
  // tables
  std::string source = "both";
};

Assembly assembly_of(const Options& o) { return o.assembly == "printed" ? Assembly::AsPrinted : Assembly::Corrected; }

ActionEngine make_engine(const Options& o) {
  if (o.seeds == "printed") {
    auto a = printed_alpha(), b = printed_beta();
    return ActionEngine(seeds_from_table(actions_from_tables(a.table, b.table)));
  }
  return ActionEngine(derived_seeds(assembly_of(o)));
}

std::string render(const Poly2& p, Basis basis, const std::string& format) {
  if (format == "json") return to_json(p, basis).dump(2);
  return format_poly2(p, basis, {format == "pretty", false});
}

int run_act(const Options& o) {
  TorusElement a = parse_torus(o.skein_expr);
  ParseResult on = parse_expression(o.on_expr);
  if (!std::holds_alternative<Poly2>(on.value)) throw ParseError(0, {"module element"}, "torus expression");
  KnotModuleElement v = parse_module(o.on_expr);
  Basis basis = o.basis == "power"       ? Basis::Power
                : o.basis == "chebyshev" ? Basis::Chebyshev
                : on.chebyshev_atoms     ? Basis::Chebyshev
                                         : Basis::Power;
  ActionEngine engine = make_engine(o);
  std::cout << render(engine.act(a, v).poly(), basis, o.format) << "\n";
  return 0;
}

int run_mul(const Options& o) {
  TorusElement r = mul(parse_torus(o.mul_a), parse_torus(o.mul_b));
  if (o.format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << format_torus(r, {o.format == "pretty", false}) << "\n";
  return 0;
}

json fixture_diff_json(const std::vector<FixtureResult>& rs) {
  json arr = json::array();
  for (const auto& r : rs)
    arr.push_back({{"name", r.fixture.name},
                   {"flag", r.fixture.flag},
                   {"status", r.match ? "match" : "mismatch"},
                   {"derived", format_poly2(r.derived, Basis::Chebyshev)},
                   {"printed", format_poly2(r.printed, Basis::Chebyshev)},
                   {"difference", format_poly2(r.difference, Basis::Chebyshev)}});
  return json{{"authoritative", "derived"}, {"entries", arr}};
}

void print_fixture_diff(const std::vector<FixtureResult>& rs, bool json_out) {
  if (json_out) {
    std::cout << fixture_diff_json(rs).dump(2) << "\n";
    return;
  }
  std::size_t m = 0;
  for (const auto& r : rs) m += r.match;
  std::cout << m << "/" << rs.size() << " printed formulas match; derived values are authoritative\n";
  for (const auto& r : rs) {
    std::cout << (r.match ? "match    " : "MISMATCH ") << r.fixture.name << " [" << r.fixture.flag << "]\n";
    if (!r.match) {
      std::cout << "  derived:    " << format_poly2(r.derived, Basis::Chebyshev) << "\n";
      std::cout << "  printed:    " << format_poly2(r.printed, Basis::Chebyshev) << "\n";
      std::cout << "  difference: " << format_poly2(r.difference, Basis::Chebyshev) << "\n";
    }
  }
}

void print_report(const DiffReport& r, bool json_out) {
  if (json_out) {
    std::cout << to_json(r).dump(2) << "\n";
    return;
  }
  const char* sym = r.kind == TableKind::Alpha ? "alpha" : "beta";
  std::cout << "generator " << r.generator << ": " << r.matches() << "/" << r.entries.size()
            << " entries match; derived values are authoritative\n";
  for (const auto& e : r.entries) {
    std::cout << (e.match ? "match    " : "MISMATCH ") << sym << "[" << e.k << "," << e.j << "] [" << e.flag << "]\n";
    if (!e.match) {
      std::cout << "  derived:    " << format_entry(e.derived, r.kind) << "\n";
      std::cout << "  printed:    " << format_entry(e.printed, r.kind) << "\n";
      std::cout << "  difference: " << format_entry(e.difference, r.kind) << "\n";
    }
  }
}

int run_derive(const Options& o) {
  bool js = o.format == "json";
  if (o.target == "reductions") {
    const ReductionRules& R = derive_reductions();
    if (js) {
      json j;
      for (int d = 4; d <= 6; ++d) j["S_" + std::to_string(d) + "(y)"] = format_module(R.rule(d), Basis::Chebyshev);
      j["X_4"] = format_module(R.X4, Basis::Chebyshev);
      if (o.compare) j["diff"] = fixture_diff_json(check_fixture_dir(data_dir() / "fixtures" / "knot"));
      std::cout << j.dump(2) << "\n";
      return 0;
    } else {
      for (int d = 4; d <= 6; ++d)
        std::cout << "S_" << d << "(y) = " << format_module(R.rule(d), Basis::Chebyshev) << "\n";
      std::cout << "X_4 = " << format_module(R.X4, Basis::Chebyshev) << "\n";
    }
    if (o.compare) print_fixture_diff(check_fixture_dir(data_dir() / "fixtures" / "knot"), js);
    return 0;
  }
  if (o.target == "handlebody-fixtures") {
    auto rs = check_fixture_dir(data_dir() / "fixtures" / "handlebody");
    if (o.compare) {
      print_fixture_diff(rs, js);
      return 0;
    }
    json arr = json::array();
    for (const auto& r : rs) {
      if (js)
        arr.push_back({{"name", r.fixture.name}, {"value", format_poly2(r.derived, Basis::Chebyshev)}});
      else
        std::cout << r.fixture.name << " = " << format_poly2(r.derived, Basis::Chebyshev) << "\n";
    }
    if (js) std::cout << arr.dump(2) << "\n";
    return 0;
  }
  TableKind kind = o.target == "theorem1" ? TableKind::Alpha : TableKind::Beta;
  CoefficientTable derived = table_from_actions(derived_action_table(assembly_of(o)), kind);
  if (o.compare) {
    PrintedTable pt = kind == TableKind::Alpha ? printed_alpha() : printed_beta();
    print_report(compare_tables(derived, pt.table, pt.flags), js);
    return 0;
  }
  const char* sym = kind == TableKind::Alpha ? "alpha" : "beta";
  json arr = json::array();
  for (const auto& [kj, e] : derived.entries) {
    if (js)
      arr.push_back({{"k", kj.first}, {"j", kj.second}, {"value", format_entry(e, kind)}});
    else
      std::cout << sym << "[" << kj.first << "," << kj.second << "] = " << format_entry(e, kind) << "\n";
  }
  if (js) std::cout << json{{"table", sym}, {"entries", arr}}.dump(2) << "\n";
  return 0;
}

int run_verify(const Options& o) {
  std::vector<CheckResult> rs;
  if (o.suite == "axioms") {
    ActionEngine engine = make_engine(o);
    rs = verify_axioms(engine, o.trials, o.seed);
  } else if (o.suite == "recursions") {
    rs = verify_recursions();
    auto ladder = verify_ladder(make_engine(o));
    rs.insert(rs.end(), ladder.begin(), ladder.end());
  } else if (o.suite == "mirrors") {
    rs = verify_mirrors();
  } else {
    rs = verify_fixtures();
  }
  for (const auto& c : rs) {
    std::cout << (c.ok ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty() && (!c.ok || o.suite == "fixtures")) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  std::size_t f = failures(rs);
  std::cout << rs.size() << " checks, " << f << " failed\n";
  return f ? 1 : 0;
}

std::string latex(std::string s) {
  s = std::regex_replace(s, std::regex(R"(\^(-?\d+))"), "^{$1}");
  s = std::regex_replace(s, std::regex(R"(\*)"), "");
  return s;
}

int run_tables(const Options& o) {
  GeneratorActionTable derived = derived_action_table(assembly_of(o));
  struct Src {
    std::string source;
    CoefficientTable table;
  };
  std::vector<Src> tabs;
  for (TableKind kind : {TableKind::Alpha, TableKind::Beta}) {
    if (o.source != "printed") tabs.push_back({"derived", table_from_actions(derived, kind)});
    if (o.source != "derived") tabs.push_back({"printed", (kind == TableKind::Alpha ? printed_alpha() : printed_beta()).table});
  }
  auto sym = [](TableKind k) { return k == TableKind::Alpha ? "alpha" : "beta"; };
  if (o.format == "csv") {
    std::cout << "source,table,k,j,basis,coefficient\n";
    for (const auto& s : tabs)
      for (const auto& [kj, e] : s.table.entries)
        for (const auto& [a, c] : e) {
          bool alpha = s.table.kind == TableKind::Alpha;
          std::string b = (a % 2 == (alpha ? 1 : 0)) ? std::string(alpha ? "u_" : "v_") + std::to_string(alpha ? (a - 1) / 2 : a / 2)
                                                      : "S_" + std::to_string(a) + "(x)";
          std::cout << s.source << "," << sym(s.table.kind) << "," << kj.first << "," << kj.second << "," << b << ","
                    << to_text(c, "t", false, true) << "\n";
        }
  } else if (o.format == "latex") {
    for (const auto& s : tabs) {
      bool alpha = s.table.kind == TableKind::Alpha;
      std::cout << "% " << s.source << " " << sym(s.table.kind) << ": "
                << (alpha ? "(1,-3)_T S_k(y) = sum_j t^{2k+2j-1} alpha_{kj} S_j(y)"
                          : "(1,-2)_T S_k(y) = sum_j t^{-2k-2j} beta_{kj} S_j(y)")
                << "\n\\begin{align*}\n";
      for (const auto& [kj, e] : s.table.entries)
        std::cout << "\\" << sym(s.table.kind) << "_{" << kj.first << "," << kj.second << "} &= "
                  << latex(format_entry(e, s.table.kind)) << " \\\\\n";
      std::cout << "\\end{align*}\n";
    }
  } else {
    json out = json::object();
    for (const auto& s : tabs) {
      json arr = json::array();
      for (const auto& [kj, e] : s.table.entries)
        arr.push_back({{"k", kj.first}, {"j", kj.second}, {"value", format_entry(e, s.table.kind)}});
      out[sym(s.table.kind)][s.source] = arr;
    }
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus skein algebra action on the skein module of the 5_2 knot complement"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--data", o.data, "fixture directory (default: built-in data dir, or $SKEIN_DATA_DIR)");

  auto* act = app.add_subcommand("act", "act with a torus element on a module element");
  act->add_option("--skein", o.skein_expr, "torus expression, e.g. \"(t^2-1)*(1,-3) + (0,1)\"")->required();
  act->add_option("--on", o.on_expr, "module element, e.g. \"x^2*y\" or \"S_2(y)\"")->required();
  act->add_option("--basis", o.basis, "output basis; auto follows the input")->check(CLI::IsMember({"auto", "chebyshev", "power"}));
  act->add_option("--format", o.format)->check(CLI::IsMember({"pretty", "text", "json"}));
  act->add_option("--seeds", o.seeds, "generator seed tables")->check(CLI::IsMember({"derived", "printed"}));
  act->add_option("--assembly", o.assembly, "(1,-3) bracket constant")->check(CLI::IsMember({"corrected", "printed"}));

  auto* mulc = app.add_subcommand("mul", "multiply two torus elements");
  mulc->add_option("a", o.mul_a)->required();
  mulc->add_option("b", o.mul_b)->required();
  mulc->add_option("--format", o.format)->check(CLI::IsMember({"pretty", "text", "json"}));

  auto* derive = app.add_subcommand("derive", "derive tables, reduction rules or handlebody values");
  derive->add_option("--target", o.target)->required()->check(CLI::IsMember({"theorem1", "theorem2", "reductions", "handlebody-fixtures"}));
  derive->add_flag("--compare", o.compare, "diff against the printed values");
  derive->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  derive->add_option("--assembly", o.assembly)->check(CLI::IsMember({"corrected", "printed"}));

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"axioms", "recursions", "mirrors", "fixtures"}));
  verify->add_option("--trials", o.trials)->check(CLI::Range(0, 1000000));
  verify->add_option("--seed", o.seed);
  verify->add_option("--seeds", o.seeds)->check(CLI::IsMember({"derived", "printed"}));
  verify->add_option("--assembly", o.assembly)->check(CLI::IsMember({"corrected", "printed"}));

  auto* tables = app.add_subcommand("tables", "export both coefficient tables");
  tables->add_option("--format", o.format)->required()->check(CLI::IsMember({"csv", "latex", "json"}));
  tables->add_option("--source", o.source)->check(CLI::IsMember({"derived", "printed", "both"}));
  tables->add_option("--assembly", o.assembly)->check(CLI::IsMember({"corrected", "printed"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (derive->parsed() && o.format == "pretty") o.format = "text";
  if (!o.data.empty()) setenv("SKEIN_DATA_DIR", o.data.c_str(), 1);

  try {
    if (act->parsed()) return run_act(o);
    if (mulc->parsed()) return run_mul(o);
    if (derive->parsed()) return run_derive(o);
    if (verify->parsed()) return run_verify(o);
    if (tables->parsed()) return run_tables(o);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const InvalidKey& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
