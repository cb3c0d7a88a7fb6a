#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylchar/growth.hpp"
#include "weylchar/guard.hpp"
#include "weylchar/io.hpp"
#include "weylchar/morphism.hpp"
#include "weylchar/parse.hpp"
#include "weylchar/poisson.hpp"
#include "weylchar/rectify.hpp"
#include "weylchar/structure.hpp"
#include "weylchar/verify.hpp"

namespace weylchar::cli {

namespace {

using nlohmann::json;

struct GlobalFlags {
  std::string algebra = "weyl";
  int n = 1;
  std::uint64_t p = 2;
  bool as_json = false;

  Context context() const {
    return Context{algebra_from_name(algebra), n, Prime(p)};
  }
};

json element_json(const Context& ctx, const std::string& text) {
  return json{{"algebra", algebra_name(ctx.algebra)},
              {"n", ctx.n},
              {"p", ctx.p.value()},
              {"element", text}};
}

void print_element(const GlobalFlags& g, const Context& ctx,
                   const std::string& text, std::ostream& out) {
  if (g.as_json) {
    out << element_json(ctx, text).dump() << '\n';
  } else {
    out << text << '\n';
  }
}

AnyEndomorphism load_map(const std::string& inline_json,
                         const std::string& file) {
  std::string payload = inline_json;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open map file '" + file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    payload = buf.str();
  }
  if (payload.empty()) {
    throw UsageError("provide the endomorphism via --map or --map-file");
  }
  json j;
  try {
    j = json::parse(payload);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid map JSON: ") + e.what());
  }
  return endomorphism_from_json(j);
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty generator list");
  return out;
}

template <AlgebraLaw Law>
std::vector<Element<Law>> parse_generators(const std::string& csv,
                                           const Context& ctx) {
  std::vector<Element<Law>> gens;
  for (const auto& text : split_list(csv)) {
    const auto expr = parse_expression(text, ctx);
    if constexpr (Law == AlgebraLaw::weyl) {
      gens.push_back(eval_weyl(expr, ctx));
    } else {
      gens.push_back(eval_poly(expr, ctx));
    }
  }
  return gens;
}

int cmd_normalize(const GlobalFlags& g, const std::string& expr,
                  std::ostream& out) {
  const Context ctx = g.context();
  print_element(g, ctx, to_string(eval_text(expr, ctx)), out);
  return 0;
}

int cmd_comm(const GlobalFlags& g, const std::string& ea,
             const std::string& eb, std::ostream& out) {
  if (g.algebra != "weyl") {
    throw UsageError("comm computes the Weyl commutator; use bracket for "
                     "the Poisson algebra");
  }
  const Context ctx = g.context();
  const auto a = eval_weyl(parse_expression(ea, ctx), ctx);
  const auto b = eval_weyl(parse_expression(eb, ctx), ctx);
  print_element(g, ctx, to_string(commutator(a, b)), out);
  return 0;
}

int cmd_bracket(const GlobalFlags& g, const std::string& ea,
                const std::string& eb, std::ostream& out) {
  Context ctx = g.context();
  ctx.algebra = AlgebraLaw::poisson;
  const auto a = eval_poly(parse_expression(ea, ctx), ctx);
  const auto b = eval_poly(parse_expression(eb, ctx), ctx);
  print_element(g, ctx, to_string(poisson_bracket(a, b)), out);
  return 0;
}

int cmd_central(const GlobalFlags& g, const std::string& expr,
                std::ostream& out) {
  const Context ctx = g.context();
  const auto value = eval_text(expr, ctx);
  const bool central =
      ctx.algebra == AlgebraLaw::weyl
          ? is_central(std::get<WeylElement>(value))
          : poisson_is_central(std::get<PolyElement>(value));
  if (g.as_json) {
    out << json{{"central", central}}.dump() << '\n';
  } else {
    out << (central ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_decompose(const GlobalFlags& g, const std::string& expr, unsigned m,
                  std::ostream& out) {
  const Context ctx = g.context();
  json parts = json::array();
  std::uint64_t big_p = ctx.p.value();
  if (ctx.algebra == AlgebraLaw::weyl) {
    const auto a = eval_weyl(parse_expression(expr, ctx), ctx);
    for (const auto& [mu, c] : central_decompose(a).parts) {
      parts.push_back(json{{"monomial",
                            monomial_to_string(mu, AlgebraLaw::weyl)},
                           {"coefficient", to_string(c)}});
    }
  } else {
    const auto f = eval_poly(parse_expression(expr, ctx), ctx);
    for (unsigned i = 1; i < m; ++i) big_p *= ctx.p.value();
    for (const auto& [mu, c] : frobenius_decompose(f, m)) {
      parts.push_back(json{{"monomial",
                            monomial_to_string(mu, AlgebraLaw::poisson)},
                           {"coefficient", to_string(c)}});
    }
  }
  if (g.as_json) {
    out << json{{"algebra", algebra_name(ctx.algebra)},
                {"n", ctx.n},
                {"p", ctx.p.value()},
                {"P", big_p},
                {"parts", parts}}
               .dump()
        << '\n';
  } else {
    for (const auto& part : parts) {
      out << part["monomial"].get<std::string>() << ": "
          << part["coefficient"].get<std::string>() << '\n';
    }
  }
  return 0;
}

template <class Elem>
int report_check(const GlobalFlags& g, const Endomorphism<Elem>& phi,
                 std::ostream& out) {
  const auto report = check_relations(phi);
  if (g.as_json) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back(json{{"relation", v.relation},
                                {"actual", to_string(v.actual)},
                                {"expected", to_string(v.expected)}});
    }
    out << json{{"valid", report.valid()}, {"violations", violations}}.dump()
        << '\n';
  } else if (report.valid()) {
    out << "valid\n";
  } else {
    for (const auto& v : report.violations) {
      out << v.relation << " = " << to_string(v.actual) << ", expected "
          << to_string(v.expected) << '\n';
    }
  }
  return report.valid() ? 0 : 1;
}

int cmd_check(const GlobalFlags& g, const std::string& map_json,
              const std::string& map_file, std::ostream& out) {
  const auto phi = load_map(map_json, map_file);
  return std::visit([&](const auto& m) { return report_check(g, m, out); },
                    phi);
}

int cmd_apply(const GlobalFlags& g, const std::string& map_json,
              const std::string& map_file, const std::string& expr,
              std::ostream& out) {
  const auto phi = load_map(map_json, map_file);
  return std::visit(
      [&](const auto& m) {
        using Elem = std::decay_t<decltype(m.u.front())>;
        const Context ctx{Elem::law, m.sig.n, m.sig.p};
        const auto parsed = parse_expression(expr, ctx);
        const Elem a = [&] {
          if constexpr (Elem::law == AlgebraLaw::weyl) {
            return eval_weyl(parsed, ctx);
          } else {
            return eval_poly(parsed, ctx);
          }
        }();
        print_element(g, ctx, to_string(apply(m, a)), out);
        return 0;
      },
      phi);
}

int cmd_kernel(const GlobalFlags& g, const std::string& map_json,
               const std::string& map_file, std::uint64_t bound,
               std::ostream& out) {
  const auto phi = load_map(map_json, map_file);
  return std::visit(
      [&](const auto& m) {
        const auto report = kernel_basis(m, bound);
        if (g.as_json) {
          json basis = json::array();
          for (const auto& e : report.basis) basis.push_back(to_string(e));
          out << json{{"degree_bound", report.degree_bound},
                      {"dimension", report.dimension},
                      {"source_dimension", report.source_dimension},
                      {"rank", report.rank},
                      {"basis", basis}}
                     .dump()
              << '\n';
        } else {
          out << "dimension " << report.dimension << " at degree bound "
              << report.degree_bound << '\n';
          for (const auto& e : report.basis) out << to_string(e) << '\n';
        }
        return 0;
      },
      phi);
}

GkFit run_fit(const GrowthTable& table, double tail) {
  return gk_fit(table, tail);
}

int cmd_growth(const GlobalFlags& g, const std::string& gens, int N,
               bool with_fit, double tail, std::ostream& out) {
  const Context ctx = g.context();
  GrowthTable table;
  if (ctx.algebra == AlgebraLaw::weyl) {
    table = span_iterate(parse_generators<AlgebraLaw::weyl>(gens, ctx), N);
  } else {
    table = span_iterate(parse_generators<AlgebraLaw::poisson>(gens, ctx), N);
  }
  if (g.as_json) {
    json j{{"generators", table.generators}, {"dims", table.dims}};
    if (with_fit) {
      const auto fit = run_fit(table, tail);
      j["fit"] = json{{"exponent", fit.exponent},
                      {"residual", fit.residual},
                      {"window", json::array({fit.window_begin,
                                              fit.window_end})}};
    }
    out << j.dump() << '\n';
  } else {
    out << growth_csv(table);
    if (with_fit) {
      const auto fit = run_fit(table, tail);
      out << json{{"exponent", fit.exponent},
                  {"residual", fit.residual},
                  {"window",
                   json::array({fit.window_begin, fit.window_end})}}
                 .dump()
          << '\n';
    }
  }
  return 0;
}

int cmd_member(const GlobalFlags& g, const std::string& gens, int N,
               const std::string& expr, std::ostream& out) {
  const Context ctx = g.context();
  bool member = false;
  if (ctx.algebra == AlgebraLaw::weyl) {
    const auto a = eval_weyl(parse_expression(expr, ctx), ctx);
    member = membership(a, parse_generators<AlgebraLaw::weyl>(gens, ctx), N);
  } else {
    const auto a = eval_poly(parse_expression(expr, ctx), ctx);
    member =
        membership(a, parse_generators<AlgebraLaw::poisson>(gens, ctx), N);
  }
  if (g.as_json) {
    out << json{{"member", member}}.dump() << '\n';
  } else {
    out << (member ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_depend(const GlobalFlags& g, const std::string& ea,
               const std::string& eb, std::ostream& out) {
  Context ctx = g.context();
  ctx.algebra = AlgebraLaw::poisson;  // forms are commutative
  const auto a = eval_poly(parse_expression(ea, ctx), ctx);
  const auto b = eval_poly(parse_expression(eb, ctx), ctx);
  const auto witness = homogeneous_dependent(a, b);
  if (g.as_json) {
    json j{{"dependent", witness.has_value()}};
    if (witness) {
      j["f"] = witness->f.residue();
      j["q"] = witness->q;
      j["r"] = witness->r;
    }
    out << j.dump() << '\n';
  } else if (witness) {
    out << "dependent: a^" << witness->q << " = " << witness->f.residue()
        << "*b^" << witness->r << '\n';
  } else {
    out << "independent\n";
  }
  return 0;
}

int cmd_rectify(const GlobalFlags& g, const std::string& ea,
                const std::string& eb, int max_steps,
                std::uint64_t max_degree, bool trace, std::ostream& out) {
  if (g.algebra != "weyl") {
    throw UsageError("rectify operates on Weyl algebra pairs");
  }
  const Context ctx = g.context();
  const auto u = eval_weyl(parse_expression(ea, ctx), ctx);
  const auto v = eval_weyl(parse_expression(eb, ctx), ctx);
  const auto res = rectify_pair(u, v, max_steps, max_degree);

  json steps = json::array();
  for (const auto& s : res.log) {
    steps.push_back(json{{"step", s.step},
                         {"q", s.q},
                         {"r", s.r},
                         {"k", s.k},
                         {"s", s.s},
                         {"f_1", s.f1.residue()},
                         {"Def", s.def}});
  }
  if (trace) {
    for (const auto& s : steps) out << s.dump() << '\n';
  }
  if (g.as_json) {
    out << json{{"status",
                 res.rectified() ? "rectified" : "cap_exceeded"},
                {"u", to_string(res.u)},
                {"v", to_string(res.v)},
                {"steps", steps},
                {"word_length_u", res.word_length_u},
                {"word_length_v", res.word_length_v}}
               .dump()
        << '\n';
  } else {
    out << (res.rectified() ? "rectified" : "cap exceeded") << '\n';
    out << "U = " << to_string(res.u) << '\n';
    out << "V = " << to_string(res.v) << '\n';
  }
  return res.rectified() ? 0 : 1;
}

int cmd_verify(bool as_json, std::optional<std::uint64_t> prime,
               const std::string& only, std::ostream& out) {
  VerifyOptions opt;
  opt.prime = prime;
  opt.only = only;
  const auto results = run_verification_suite(opt);
  bool all_green = true;
  if (as_json) {
    json j = json::array();
    for (const auto& r : results) {
      all_green = all_green && r.passed;
      j.push_back(json{{"name", r.name},
                       {"passed", r.passed},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
    }
    out << j.dump() << '\n';
  } else {
    for (const auto& r : results) {
      all_green = all_green && r.passed;
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " ("
          << std::fixed << std::setprecision(2) << r.seconds << " s)";
      if (!r.detail.empty()) out << "  " << r.detail;
      out << '\n';
    }
    out << (all_green ? "all checks passed\n" : "some checks FAILED\n");
  }
  return all_green ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err) {
  if (const char* limit = std::getenv("WEYLCHAR_MAX_TERMS")) {
    try {
      set_max_term_count(std::stoull(limit));
    } catch (const std::exception&) {
      err << "invalid WEYLCHAR_MAX_TERMS value '" << limit << "'\n";
      return 2;
    }
  }

  CLI::App app{"exact computation in Weyl and symplectic Poisson algebras "
               "over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalFlags g;
  app.add_option("--algebra", g.algebra, "algebra kind (weyl | poisson)")
      ->check(CLI::IsMember({"weyl", "poisson"}));
  app.add_option("--n", g.n, "number of generator pairs")->check(
      CLI::PositiveNumber);
  app.add_option("--p", g.p, "prime characteristic");
  app.add_flag("--json", g.as_json, "structured JSON output");

  std::string expr, expr2, map_json, map_file, gens, only;
  unsigned frob_m = 1;
  std::uint64_t bound = 4, max_degree = 512, verify_p = 0;
  int N = 10, max_steps = 16;
  bool with_fit = false, trace = false;
  double tail = 0.5;

  auto* normalize =
      app.add_subcommand("normalize", "canonical form of an expression");
  normalize->add_option("expr", expr, "expression")->required();

  auto* comm = app.add_subcommand("comm", "commutator [a, b] in A_n");
  comm->add_option("a", expr, "left expression")->required();
  comm->add_option("b", expr2, "right expression")->required();

  auto* bracket =
      app.add_subcommand("bracket", "Poisson bracket {f, g} in PS_n");
  bracket->add_option("f", expr, "left expression")->required();
  bracket->add_option("g", expr2, "right expression")->required();

  auto* central =
      app.add_subcommand("central", "does the element lie in the center?");
  central->add_option("expr", expr, "expression")->required();

  auto* decompose = app.add_subcommand(
      "decompose", "decomposition over the center (weyl) or over the "
                   "p^m-th powers (poisson)");
  decompose->add_option("expr", expr, "expression")->required();
  decompose->add_option("--m", frob_m, "Frobenius exponent m (poisson)");

  auto* check =
      app.add_subcommand("check", "verify the defining relations of a map");
  check->add_option("--map", map_json, "endomorphism JSON");
  check->add_option("--map-file", map_file, "endomorphism JSON file");

  auto* apply_cmd = app.add_subcommand("apply", "apply a map to an element");
  apply_cmd->add_option("--map", map_json, "endomorphism JSON");
  apply_cmd->add_option("--map-file", map_file, "endomorphism JSON file");
  apply_cmd->add_option("expr", expr, "expression")->required();

  auto* kernel =
      app.add_subcommand("kernel", "bounded-degree kernel of a map");
  kernel->add_option("--map", map_json, "endomorphism JSON");
  kernel->add_option("--map-file", map_file, "endomorphism JSON file");
  kernel->add_option("--bound", bound, "source degree bound")->required();

  auto* growth = app.add_subcommand(
      "growth", "filtration dimensions of a generated subalgebra");
  growth->add_option("--gens", gens, "comma-separated generator expressions")
      ->required();
  growth->add_option("--N", N, "number of levels")->required();
  growth->add_flag("--fit", with_fit, "append a growth-exponent fit");
  growth->add_option("--tail", tail, "fit window fraction (default 0.5)");

  auto* member = app.add_subcommand(
      "member", "is the element in the length-N span of the generators?");
  member->add_option("--gens", gens, "comma-separated generator expressions")
      ->required();
  member->add_option("--N", N, "span length")->required();
  member->add_option("expr", expr, "expression")->required();

  auto* depend = app.add_subcommand(
      "depend", "algebraic dependence of two homogeneous forms");
  depend->add_option("a", expr, "first form")->required();
  depend->add_option("b", expr2, "second form")->required();

  auto* rectify = app.add_subcommand(
      "rectify", "replace a pair until its leading forms are independent");
  rectify->add_option("u", expr, "first element")->required();
  rectify->add_option("v", expr2, "second element")->required();
  rectify->add_option("--max-steps", max_steps, "step cap (default 16)");
  rectify->add_option("--max-degree", max_degree, "degree cap (default 512)");
  rectify->add_flag("--trace", trace, "print one JSON line per step");

  auto* verify = app.add_subcommand(
      "verify-paper", "run the built-in verification battery");
  verify->add_option("--p", verify_p,
                     "restrict prime sweeps to this prime");
  verify->add_option("--only", only, "run a single named criterion");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*normalize) return cmd_normalize(g, expr, out);
    if (*comm) return cmd_comm(g, expr, expr2, out);
    if (*bracket) return cmd_bracket(g, expr, expr2, out);
    if (*central) return cmd_central(g, expr, out);
    if (*decompose) return cmd_decompose(g, expr, frob_m, out);
    if (*check) return cmd_check(g, map_json, map_file, out);
    if (*apply_cmd) return cmd_apply(g, map_json, map_file, expr, out);
    if (*kernel) return cmd_kernel(g, map_json, map_file, bound, out);
    if (*growth) return cmd_growth(g, gens, N, with_fit, tail, out);
    if (*member) return cmd_member(g, gens, N, expr, out);
    if (*depend) return cmd_depend(g, expr, expr2, out);
    if (*rectify) {
      return cmd_rectify(g, expr, expr2, max_steps, max_degree, trace, out);
    }
    if (*verify) {
      std::optional<std::uint64_t> prime;
      if (verify_p != 0) prime = verify_p;
      return cmd_verify(g.as_json, prime, only, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ComputeError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace weylchar::cli
