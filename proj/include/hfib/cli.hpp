#pragma once

// Command-line front end. run() never exits the process: it returns
// 0 when everything requested passed, 1 when a verification failed and
// 2 on a usage error.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hfib/hfib.hpp"

namespace hfib::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

using nlohmann::json;

inline json with_schema(json j) {
  json out = {{"schema", kReportSchema}};
  out.update(j);
  return out;
}

inline void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline json to_json(const OpPoly& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.coefficients()) terms.push_back({{"coeff", to_fraction_string(c)}, {"D", k}});
  return terms;
}

inline json to_json(const XPoly& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(to_json(c));
  return out;
}

inline std::string markdown_row(const std::vector<std::string>& cells) {
  std::string s = "|";
  for (const auto& c : cells) s += " " + c + " |";
  return s;
}

inline std::string markdown_rule(std::size_t columns) {
  std::string s = "|";
  for (std::size_t i = 0; i < columns; ++i) s += "---|";
  return s;
}

inline int pascal(std::ostream& out, unsigned rows, const std::string& format) {
  const auto triangle = pascal_triangle(rows);
  if (format == "json") {
    json j = json::array();
    for (const auto& row : triangle) {
      json entries = json::array();
      for (const auto& e : row.entries) entries.push_back(hfib::to_json(e));
      j.push_back({{"n", row.n}, {"entries", entries}});
    }
    print_json(out, with_schema({{"rows", j}}));
  } else if (format == "csv") {
    out << "n,k,value\n";
    for (const auto& row : triangle) {
      for (std::size_t k = 0; k < row.entries.size(); ++k) {
        out << row.n << "," << k << ",\"" << to_string(row.entries[k]) << "\"\n";
      }
    }
  } else {
    std::vector<std::string> header{"n"};
    for (unsigned k = 0; k <= rows; ++k) header.push_back("k=" + std::to_string(k));
    out << markdown_row(header) << "\n" << markdown_rule(header.size()) << "\n";
    for (const auto& row : triangle) {
      std::vector<std::string> cells{std::to_string(row.n)};
      for (const auto& e : row.entries) cells.push_back(to_string(e));
      cells.resize(header.size());
      out << markdown_row(cells) << "\n";
    }
  }
  return kExitPass;
}

inline HPoly fib_by_route(unsigned n, const std::string& route) {
  if (route == "recurrence") return hfib_recurrence(n);
  if (route == "hypergeom") return hfib_hypergeometric(n);
  if (route == "binet") return hfib_binet(n);
  return hfib_diagonal(n);
}

inline void print_poly(std::ostream& out, const HPoly& p, const std::string& format, json extra = json::object()) {
  if (format == "json") {
    extra["value"] = hfib::to_json(p);
    extra["rendering"] = to_string(p);
    print_json(out, with_schema(extra));
  } else {
    out << to_string(p) << "\n";
  }
}

inline std::string factored_term(const std::string& coeff, unsigned h_exp, unsigned rising) {
  std::string term = coeff;
  if (h_exp == 0 && rising == 0) return term;
  if (term == "1") {
    term.clear();
  } else {
    term += "*";
  }
  term += h_exp == 1 ? "h" : "h^" + std::to_string(h_exp);
  for (unsigned j = 0; j < rising; ++j) term += j == 0 ? "*hp" : "*(hp+" + std::to_string(j) + ")";
  return term;
}

/// Σ_k C(n-1-k, k)·h^k·hp(hp+1)...(hp+k-1), the rising-factorial layout.
inline std::string factored_fib(unsigned n) {
  if (n == 0) return "0";
  std::string out;
  for (unsigned k = 0; 2 * k <= n - 1; ++k) {
    out += (out.empty() ? "" : " + ") + factored_term(binomial(n - 1 - k, k).get_str(), k, k);
  }
  return out;
}

inline int table_cmd(std::ostream& out, unsigned max, const std::string& format) {
  const FibTable t = fib_table(max);
  const auto printed = printed_fib_table();
  auto note = [&](unsigned n) -> std::string {
    if (n >= printed.size()) return "";
    if (printed_fib_table_value(n) == t.rows[n].value) return "";
    std::string printed_form;
    for (const auto& term : printed[n]) {
      printed_form += (printed_form.empty() ? "" : " + ") +
                      factored_term(std::to_string(term.coeff), term.h_exp, term.rising);
    }
    return "printed as " + printed_form;
  };
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json row = {{"n", r.n},
                  {"value", hfib::to_json(r.value)},
                  {"rendering", to_string(r.value)},
                  {"factored", factored_fib(r.n)},
                  {"classical", to_display_string(r.classical)}};
      if (const auto n = note(r.n); !n.empty()) row["note"] = n;
      rows.push_back(std::move(row));
    }
    print_json(out, with_schema({{"rows", rows}, {"report", hfib::to_json(t.report)}}));
  } else {
    out << markdown_row({"n", "F_n^(h,h')", "expanded", "classical", "note"}) << "\n" << markdown_rule(5) << "\n";
    for (const auto& r : t.rows) {
      out << markdown_row({std::to_string(r.n), factored_fib(r.n), to_string(r.value),
                           to_display_string(r.classical), note(r.n)})
          << "\n";
    }
    for (const auto& pc : t.report.pinned_conventions) {
      out << "\n> " << pc.ambiguity << "; using " << pc.resolution << "\n";
    }
  }
  return t.report.passed() ? kExitPass : kExitFail;
}

inline int op_cmd(std::ostream& out, unsigned n, bool eval, const std::string& format) {
  const OpPoly op = fib_op(n);
  if (format == "json") {
    json j = {{"n", n}, {"operator", to_json(op)}, {"rendering", to_string(op)}};
    if (eval) {
      const HPoly image = op_eval(op);
      j["eval"] = hfib::to_json(image);
      j["eval_rendering"] = to_string(image);
    }
    print_json(out, with_schema(j));
  } else {
    out << to_string(op) << "\n";
    if (eval) out << to_string(op_eval(op)) << "\n";
  }
  return kExitPass;
}

inline int gf_cmd(std::ostream& out, std::ostream& err, const std::string& which, unsigned order,
                  const std::string& format) {
  const auto f = gf_by_name(which);
  if (!f) {
    err << "error: unknown generating function '" << which
        << "' (expected fib, even, odd, shift:m, square, product, product-shift or cube)\n";
    return kExitUsage;
  }
  const OpSeries s = series_expand(*f, order);
  if (format == "json") {
    json coeffs = json::array();
    for (std::size_t k = 0; k < order; ++k) coeffs.push_back(to_json(s[k]));
    print_json(out, with_schema({{"which", which},
                                 {"order", order},
                                 {"numerator", to_json(f->numerator)},
                                 {"denominator", to_json(f->denominator)},
                                 {"coefficients", coeffs}}));
  } else {
    out << markdown_row({"k", "coefficient"}) << "\n" << markdown_rule(2) << "\n";
    for (std::size_t k = 0; k < order; ++k) out << markdown_row({std::to_string(k), to_string(s[k])}) << "\n";
  }
  return kExitPass;
}

inline int report_group(std::ostream& out, const SuiteGroup& g, const std::string& format) {
  if (format == "json") {
    print_json(out, with_schema(to_json(g)));
  } else {
    for (const auto& p : g.parts) {
      out << (p.passed() ? "PASS " : "FAIL ") << p.suite << " cases=" << p.cases;
      if (!p.passed()) out << " failures=" << p.failures.size();
      if (p.experimental) {
        const auto holds = std::count_if(p.observations.begin(), p.observations.end(),
                                         [](const Observation& o) { return o.holds; });
        out << " observations=" << holds << "/" << p.observations.size() << " hold";
      }
      out << "\n";
      for (const auto& f : p.failures) out << "  " << f.params << ": " << f.lhs << " != " << f.rhs << "\n";
      for (const auto& pc : p.pinned_conventions) out << "  pinned: " << pc.ambiguity << " -> " << pc.resolution << "\n";
    }
    out << (g.passed() ? "PASS " : "FAIL ") << g.total.suite << " cases=" << g.total.cases
        << " failures=" << g.total.failures.size() << "\n";
  }
  return g.passed() ? kExitPass : kExitFail;
}

struct WeightedArgs {
  std::string p = "2";
  std::string h = "1/10";
  std::string hp = "1/2";
  unsigned order = 80;
  std::string tol = "1e-12";
};

inline int weighted_cmd(std::ostream& out, const WeightedArgs& a, const std::string& format) {
  const BigRational p = parse_number(a.p), h = parse_number(a.h), hp = parse_number(a.hp),
                    tol = parse_number(a.tol);
  SuiteGroup g;
  g.total.suite = "weighted";
  IdentityReport r = weighted_series_report(p, h, hp, a.order, tol);
  json values;
  try {
    const auto w = weighted_series_check(p, h, hp, a.order, tol);
    values = {{"fib_side", to_double(w.fib_side)},
              {"geometric_side", to_double(w.geometric_side)},
              {"difference", to_double(w.difference)}};
  } catch (const NonConvergentError&) {
    values = nullptr;
  }
  g.add(std::move(r));
  g.add(verify_classical_weight_bullets());
  if (format == "json") {
    json j = to_json(g);
    j["values"] = values;
    print_json(out, with_schema(j));
    return g.passed() ? kExitPass : kExitFail;
  }
  return report_group(out, g, format);
}

inline int eval_cmd(std::ostream& out, std::optional<unsigned> n, const std::string& poly, const std::string& h,
                    const std::string& hp, const std::string& q, const std::string& format) {
  HPoly p;
  if (n) {
    p = hfib_diagonal(*n);
  } else {
    p = hpoly_from_json(json::parse(poly));
  }
  const BigRational v = eval_point(p, parse_number(h), parse_number(hp), parse_number(q));
  if (format == "json") {
    print_json(out, with_schema({{"value", to_fraction_string(v)}, {"approx", to_double(v)}}));
  } else {
    out << to_display_string(v) << "\n";
  }
  return kExitPass;
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact h-deformed Fibonacci calculus: tables, operators, generating functions and identity checks",
               "hfib"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = kDefaultSeed;
  app.add_option("--seed", seed, "Seed for randomized samples (Charlier points, composition-rule operators)")
      ->capture_default_str();

  const auto formats = [](std::initializer_list<const char*> allowed) {
    return CLI::IsMember(std::vector<std::string>(allowed.begin(), allowed.end()));
  };

  // One variable per subcommand where defaults differ: default_val writes
  // through to the bound variable at declaration time.
  std::string fmt_pascal, fmt_fib, fmt_table, fmt_op, fmt_gf, fmt_qh, fmt_verify, fmt_eval;
  unsigned n = 0, k = 0, rows = 0, table_max = 10, max = 12, order = kDefaultGfOrder;

  auto* pascal = app.add_subcommand("pascal", "Print the h-Pascal triangle");
  pascal->add_option("--rows", rows, "Last row index")->required()->check(CLI::Range(0u, 200u));
  pascal->add_option("--format", fmt_pascal, "markdown, json or csv")->default_val("markdown")->check(
      formats({"markdown", "json", "csv"}));

  std::string route = "diagonal";
  auto* fib = app.add_subcommand("fib", "Print the h-Fibonacci polynomial F_n");
  fib->add_option("--n", n, "Index")->required()->check(CLI::Range(0u, 2000u));
  fib->add_option("--route", route, "diagonal, recurrence, hypergeom or binet")
      ->capture_default_str()
      ->check(formats({"diagonal", "recurrence", "hypergeom", "binet"}));
  fib->add_option("--format", fmt_fib, "markdown or json")->default_val("markdown")->check(
      formats({"markdown", "json"}));

  auto* table = app.add_subcommand("table2", "Reproduce the table of F_n with its classical limits");
  table->add_option("--max", table_max, "Last index")->default_val(10)->check(CLI::Range(0u, 500u));
  table->add_option("--format", fmt_table, "markdown or json")->default_val("markdown")->check(
      formats({"markdown", "json"}));

  bool eval = false;
  auto* op = app.add_subcommand("op", "Print the operator F_n in Q[D]");
  op->add_option("--n", n, "Index")->required()->check(CLI::Range(0u, 2000u));
  op->add_flag("--eval", eval, "Also print its image on t^(-h') at t = 1");
  op->add_option("--format", fmt_op, "markdown or json")->default_val("markdown")->check(
      formats({"markdown", "json"}));

  std::string which;
  auto* gf = app.add_subcommand("gf", "Expand a generating function in Q[D][[x]]");
  gf->add_option("--which", which, "fib, even, odd, shift:m, square, product, product-shift or cube")->required();
  gf->add_option("--order", order, "Number of coefficients")->capture_default_str()->check(CLI::Range(1u, 500u));
  gf->add_option("--format", fmt_gf, "json or markdown")->default_val("json")->check(formats({"json", "markdown"}));

  auto* qh = app.add_subcommand("qh", "(q,h)-binomials and q-Fibonacci polynomials");
  qh->require_subcommand(1);
  auto* qh_binom = qh->add_subcommand("binom", "Print the (q,h)-binomial [n, k]");
  qh_binom->add_option("--n", n, "Row")->required()->check(CLI::Range(0u, 200u));
  qh_binom->add_option("--k", k, "Column")->required()->check(CLI::Range(0u, 200u));
  auto* qh_fib = qh->add_subcommand("fib", "Print the q-Fibonacci polynomial");
  qh_fib->add_option("--n", n, "Index")->required()->check(CLI::Range(0u, 200u));
  for (auto* s : {qh_binom, qh_fib}) {
    s->add_option("--format", fmt_qh, "markdown or json")->default_val("markdown")->check(
        formats({"markdown", "json"}));
  }

  auto* verify = app.add_subcommand("verify", "Run identity suites; exit 1 on any failure");
  verify->require_subcommand(1);
  std::vector<CLI::App*> verify_subs;
  auto add_verify = [&](const char* name, const char* desc) {
    auto* s = verify->add_subcommand(name, desc);
    s->add_option("--format", fmt_verify, "json or markdown")->default_val("json")->check(formats({"json", "markdown"}));
    verify_subs.push_back(s);
    return s;
  };
  auto* v_pascal = add_verify("pascal", "h-Pascal rules, column sums and Charlier samples");
  auto* v_fib = add_verify("fib", "h-Fibonacci identities, routes, limits and table rows");
  auto* v_ops = add_verify("operators", "Operator-calculus identities");
  auto* v_gf = add_verify("gf", "Generating functions and series lemmas");
  auto* v_weighted = add_verify("weighted", "Weighted series at a given point");
  auto* v_qh = add_verify("qh", "(q,h)-recurrences and q = 1 specializations");
  auto* v_all = add_verify("all", "Every non-experimental suite");
  for (auto* s : {v_pascal, v_fib, v_ops, v_qh, v_all}) {
    s->add_option("--max", max, "Size bound")->default_val(12)->check(CLI::Range(0u, 60u));
  }
  v_gf->add_option("--order", order, "Number of coefficients")->capture_default_str()->check(
      CLI::Range(1u, 200u));
  bool experimental = false, strict = false;
  v_qh->add_flag("--experimental", experimental, "Add the q-Fibonacci observations (not gating)");
  v_qh->add_flag("--strict", strict, "Assert the hh'-augmented q-recurrence");
  detail::WeightedArgs wargs;
  // --h names the deformation parameter, so help is long-form only here.
  v_weighted->set_help_flag("--help", "Print this help message and exit");
  v_weighted->add_option("--p", wargs.p, "Nonzero rational p")->capture_default_str();
  v_weighted->add_option("--h", wargs.h, "Rational h")->capture_default_str();
  v_weighted->add_option("--hp", wargs.hp, "Rational h'")->capture_default_str();
  v_weighted->add_option("--order", wargs.order, "Truncation order")->capture_default_str()->check(
      CLI::Range(0u, 2000u));
  v_weighted->add_option("--tol", wargs.tol, "Tolerance (rational or decimal)")->capture_default_str();

  std::optional<unsigned> eval_n;
  std::string poly, at_h, at_hp, at_q = "1";
  auto* ev = app.add_subcommand("eval", "Evaluate F_n or a JSON polynomial at a rational point");
  ev->set_help_flag("--help", "Print this help message and exit");
  auto* ev_n = ev->add_option("--n", eval_n, "Index of F_n")->check(CLI::Range(0u, 2000u));
  auto* ev_poly = ev->add_option("--poly", poly, "Polynomial in the canonical JSON form");
  ev_n->excludes(ev_poly);
  ev->add_option("--h", at_h, "Value of h")->required();
  ev->add_option("--hp", at_hp, "Value of h'")->required();
  ev->add_option("--q", at_q, "Value of q")->capture_default_str();
  ev->add_option("--format", fmt_eval, "markdown or json")->default_val("markdown")->check(
      formats({"markdown", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (pascal->parsed()) return detail::pascal(out, rows, fmt_pascal);
    if (fib->parsed()) {
      detail::print_poly(out, detail::fib_by_route(n, route), fmt_fib, {{"n", n}, {"route", route}});
      return kExitPass;
    }
    if (table->parsed()) return detail::table_cmd(out, table_max, fmt_table);
    if (op->parsed()) return detail::op_cmd(out, n, eval, fmt_op);
    if (gf->parsed()) return detail::gf_cmd(out, err, which, order, fmt_gf);
    if (qh_binom->parsed()) {
      detail::print_poly(out, qh_binomial(n, k), fmt_qh, {{"n", n}, {"k", k}});
      return kExitPass;
    }
    if (qh_fib->parsed()) {
      detail::print_poly(out, q_fibonacci(n), fmt_qh, {{"n", n}});
      return kExitPass;
    }
    if (v_pascal->parsed()) return detail::report_group(out, pascal_suites(max, seed), fmt_verify);
    if (v_fib->parsed()) return detail::report_group(out, fib_suites(max), fmt_verify);
    if (v_ops->parsed()) return detail::report_group(out, operator_suites(max, seed), fmt_verify);
    if (v_gf->parsed()) return detail::report_group(out, gf_suites(order), fmt_verify);
    if (v_weighted->parsed()) return detail::weighted_cmd(out, wargs, fmt_verify);
    if (v_qh->parsed()) return detail::report_group(out, qh_suites(max, experimental, strict), fmt_verify);
    if (v_all->parsed()) return detail::report_group(out, all_suites(max, seed), fmt_verify);
    if (ev->parsed()) {
      if (!eval_n && poly.empty()) {
        err << "error: eval needs --n or --poly\n";
        return kExitUsage;
      }
      return detail::eval_cmd(out, eval_n, poly, at_h, at_hp, at_q, fmt_eval);
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace hfib::cli
