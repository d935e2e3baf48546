// Command-line driver: axiom checks, integrals, invariants, move scripts and
// JSON export.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hennings/builtin.hpp"
#include "hennings/integrals.hpp"
#include "hennings/invariant.hpp"
#include "hennings/io.hpp"
#include "hennings/kirby.hpp"
#include "hennings/verify.hpp"

using namespace hennings;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

/// Input problems detected by the driver itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string algebra;
  std::string diagram;
  std::string connection = "trivial";
  std::string script;
  std::string format = "text";
};

HopfGAlgebra load_algebra(const std::string& text) {
  try {
    if (is_builtin_algebra_name(text)) return parse_builtin_algebra(text);
    return algebra_from_json(read_json_file(text));
  } catch (const AlgebraError& e) {
    throw UsageError(e.what());
  }
}

KirbyDiagram load_diagram(const std::string& text) {
  if (text.rfind("connected-sum:", 0) == 0) {
    const std::string rest = text.substr(14);
    std::string last_error = "bad connected-sum name \"" + text + "\"";
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] != ',') continue;
      try {
        return disjoint_union(load_diagram(rest.substr(0, i)), load_diagram(rest.substr(i + 1)));
      } catch (const std::exception& e) {
        last_error = e.what();
      }
    }
    throw UsageError(last_error);
  }
  if (is_builtin_diagram_name(text)) return builtin_diagram(text);
  return diagram_from_json(read_json_file(text));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

/// "trivial" or a comma separated list of generator images.
GroupHom parse_connection(const std::string& text, const FiniteGroup& g, const KirbyDiagram& d) {
  GroupHom hom;
  if (text == "trivial") {
    hom.images.assign(d.dotted.size(), g.identity());
    return hom;
  }
  const auto parts = text.empty() ? std::vector<std::string>{} : split(text, ',');
  if (parts.size() != d.dotted.size()) {
    throw UsageError("connection lists " + std::to_string(parts.size()) + " images but the diagram has " +
                     std::to_string(d.dotted.size()) + " dotted components");
  }
  for (const auto& p : parts) hom.images.push_back(g.parse_element(p));
  return hom;
}

std::string ordinal(unsigned n) {
  const unsigned t = n % 100;
  const char* suffix = (t >= 11 && t <= 13) ? "th" : n % 10 == 1 ? "st" : n % 10 == 2 ? "nd" : n % 10 == 3 ? "rd" : "th";
  return std::to_string(n) + suffix;
}

std::string render(const CycloScalar& x) {
  std::string out = x.to_string();
  if (!x.is_rational()) out += "  (z = primitive " + ordinal(x.conductor()) + " root of unity)";
  return out;
}

std::string render_hom(const FiniteGroup& g, const GroupHom& hom) {
  std::string out = "[";
  for (std::size_t i = 0; i < hom.images.size(); ++i) out += (i ? ", " : "") + g.name(hom.images[i]);
  return out + "]";
}

Json hom_json(const FiniteGroup& g, const GroupHom& hom) {
  Json out = Json::array();
  for (const auto a : hom.images) out.push_back(g.name(a));
  return out;
}

Json value_json(const InvariantValue& v) {
  return {{"value", v.value.to_literal()},
          {"decimal", to_decimal(v.value)},
          {"bracket", v.bracket.to_literal()},
          {"exponent", v.exponent}};
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_check(const Options& o) {
  const HopfGAlgebra h = load_algebra(o.algebra);
  const AxiomReport report = verify_axioms(h);
  bool ok = report.all_passed();
  std::string integrals = "pass", ribbon = "pass";
  if (ok) {
    try {
      const IntegralData in = solve_integrals(h);
      const std::string laws = check_integral_laws(h, in);
      if (!laws.empty()) integrals = laws;
    } catch (const AlgebraError& e) {
      integrals = e.what();
    }
    try {
      drinfeld_element(h);
    } catch (const AlgebraError& e) {
      ribbon = e.what();
    }
  } else {
    integrals = ribbon = "skipped (axioms failed)";
  }
  ok = ok && integrals == "pass" && ribbon == "pass";
  if (o.format == "json") {
    Json axioms = Json::array();
    for (const auto& r : report.results) axioms.push_back({{"name", r.name}, {"passed", r.passed}, {"witness", r.witness}});
    print_json({{"algebra", o.algebra}, {"axioms", axioms}, {"integrals", integrals}, {"ribbon", ribbon}, {"ok", ok}});
  } else {
    std::cout << format_report(report);
    std::cout << (integrals == "pass" ? "pass integrals" : "FAIL integrals  " + integrals) << "\n";
    std::cout << (ribbon == "pass" ? "pass ribbon" : "FAIL ribbon  " + ribbon) << "\n";
    std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_integrals(const Options& o) {
  const HopfGAlgebra h = load_algebra(o.algebra);
  const FiniteGroup& g = h.group();
  const IntegralData in = solve_integrals(h);
  const DrinfeldData dr = drinfeld_element(h);
  if (o.format == "json") {
    Json lam = Json::object();
    for (const auto a : g.elements()) lam[g.name(a)] = vector_to_json(in.at(a).entries);
    print_json({{"algebra", o.algebra},
                {"Lambda", lam},
                {"lambda", vector_to_json(in.lambda)},
                {"u", vector_to_json(dr.u.entries)},
                {"u_inverse", vector_to_json(dr.u_inverse.entries)}});
  } else {
    for (const auto a : g.elements()) std::cout << "Lambda_" << g.name(a) << " = " << format_vector(in.at(a).entries) << "\n";
    std::cout << "lambda = " << format_vector(in.lambda) << "\n";
    std::cout << "u = " << format_vector(dr.u.entries) << "\n";
    std::cout << "u^-1 = " << format_vector(dr.u_inverse.entries) << "\n";
  }
  return kOk;
}

int cmd_invariant(const Options& o) {
  const HopfGAlgebra h = load_algebra(o.algebra);
  const FiniteGroup& g = h.group();
  const KirbyDiagram d = load_diagram(o.diagram);
  const IntegralData in = solve_integrals(h);
  Json out = {{"algebra", o.algebra}, {"diagram", o.diagram}};
  if (o.connection == "all") {
    const SummedValue s = evaluate_summed(h, in, d);
    Json rows = Json::array();
    for (std::size_t i = 0; i < s.homs.size(); ++i) {
      if (o.format == "json") {
        Json row = value_json(s.values[i]);
        row["connection"] = hom_json(g, s.homs[i]);
        rows.push_back(row);
      } else {
        std::cout << "connection " << render_hom(g, s.homs[i]) << ": " << render(s.values[i].value) << "\n"
                  << "  decimal (display only): " << to_decimal(s.values[i].value) << "\n";
      }
    }
    if (o.format == "json") {
      out["connections"] = rows;
      out["sum"] = s.total.to_literal();
      out["sum_decimal"] = to_decimal(s.total);
      print_json(out);
    } else {
      std::cout << "sum over " << s.homs.size() << " connections: " << render(s.total) << "\n"
                << "  decimal (display only): " << to_decimal(s.total) << "\n";
    }
    return kOk;
  }
  const GroupHom hom = parse_connection(o.connection, g, d);
  const InvariantValue v = evaluate(h, in, color(d, g, hom));
  if (o.format == "json") {
    Json row = value_json(v);
    row["connection"] = hom_json(g, hom);
    out["connections"] = Json::array({row});
    print_json(out);
  } else {
    std::cout << "connection " << render_hom(g, hom) << ": " << render(v.value) << "\n"
              << "  decimal (display only): " << to_decimal(v.value) << "\n";
  }
  return kOk;
}

int cmd_moves(const Options& o) {
  const HopfGAlgebra h = load_algebra(o.algebra);
  const FiniteGroup& g = h.group();
  const KirbyDiagram d = load_diagram(o.diagram);
  const IntegralData in = solve_integrals(h);
  const std::vector<MoveSpec> script = moves_from_json(read_json_file(o.script), g);
  ColoredDiagram cd = color(d, g, parse_connection(o.connection, g, d));
  const InvariantValue start = evaluate(h, in, cd);
  bool all_equal = true;
  Json steps = Json::array();
  if (o.format != "json") std::cout << "start: " << render(start.value) << "\n";
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      cd = apply_move(g, cd, script[i]);
    } catch (const KirbyError& e) {
      throw UsageError("step " + std::to_string(i) + " (" + describe(script[i], g) + "): " + e.what());
    }
    const InvariantValue v = evaluate(h, in, cd);
    const bool equal = v.value == start.value;
    all_equal = all_equal && equal;
    if (o.format == "json") {
      Json row = value_json(v);
      row["step"] = i;
      row["move"] = move_name(script[i]);
      row["equal"] = equal;
      steps.push_back(row);
    } else {
      std::cout << "step " << i << " " << describe(script[i], g) << ": " << render(v.value)
                << (equal ? "  equal" : "  MISMATCH") << "\n";
    }
  }
  if (o.format == "json") {
    print_json({{"algebra", o.algebra},
                {"diagram", o.diagram},
                {"start", value_json(start)},
                {"steps", steps},
                {"all_equal", all_equal}});
  } else {
    std::cout << (all_equal ? "all values equal" : "invariance violated") << "\n";
  }
  return all_equal ? kOk : kFailed;
}

int cmd_export(const Options& o) {
  if (o.algebra.empty() == o.diagram.empty()) throw UsageError("export needs exactly one of --algebra and --diagram");
  if (!o.algebra.empty()) {
    print_json(algebra_to_json(load_algebra(o.algebra)));
  } else {
    print_json(diagram_to_json(load_diagram(o.diagram)));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of G-colored Kirby diagrams from Hopf G-algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_algebra = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--algebra", o.algebra, "builtin name (cyclic:k=K,l=L,d=D, kac-paljutkin) or JSON file");
    if (required) opt->required();
  };
  auto add_diagram = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--diagram", o.diagram, "builtin name, connected-sum:A,B, or JSON file");
    if (required) opt->required();
  };
  auto add_connection = [&](CLI::App* sub, bool allow_all) {
    sub->add_option("--connection", o.connection,
                    allow_all ? "trivial, all, or comma separated generator images"
                              : "trivial or comma separated generator images");
  };

  auto* check = app.add_subcommand("check", "verify every axiom, the integrals and the ribbon element");
  add_algebra(check, true);
  add_format(check);
  auto* integrals = app.add_subcommand("integrals", "print the G-integral, the dual integral and u");
  add_algebra(integrals, true);
  add_format(integrals);
  auto* invariant = app.add_subcommand("invariant", "evaluate the invariant on a colored diagram");
  add_algebra(invariant, true);
  add_diagram(invariant, true);
  add_connection(invariant, true);
  add_format(invariant);
  auto* sum = app.add_subcommand("sum", "same as invariant --connection all");
  add_algebra(sum, true);
  add_diagram(sum, true);
  add_format(sum);
  auto* moves = app.add_subcommand("moves", "apply a move script and compare values after every step");
  add_algebra(moves, true);
  add_diagram(moves, true);
  add_connection(moves, false);
  moves->add_option("--script", o.script, "JSON move script")->required();
  add_format(moves);
  auto* exp = app.add_subcommand("export", "write a builtin algebra or diagram as JSON");
  add_algebra(exp, false);
  add_diagram(exp, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(o);
    if (*integrals) return cmd_integrals(o);
    if (*invariant) return cmd_invariant(o);
    if (*sum) {
      o.connection = "all";
      return cmd_invariant(o);
    }
    if (*moves) return cmd_moves(o);
    if (*exp) return cmd_export(o);
  } catch (const AlgebraError& e) {
    // integral solving or ribbon certification failed
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const EvaluationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
