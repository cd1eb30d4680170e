#ifndef DBIC_TOOLS_CLI_HPP
#define DBIC_TOOLS_CLI_HPP

// Command-line front end. Kept header-only so tests can drive it in-process.
//
// Exit codes:
//   0  success / identifiable / valid code
//   1  not identifiable, no code exists, or a verified code is invalid
//   2  invalid parameters or usage
//   3  closed-form ball requested outside its validity domain
//   4  exact search stopped at its node budget (incumbent printed)
//   5  the two ball methods disagree

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dbic/dbic.hpp"

namespace dbic::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInvalid = 2,
  kNotApplicable = 3,
  kBudgetExhausted = 4,
  kMismatch = 5,
};

/// Vertex cap: the flag when given, else DBIC_MAX_VERTICES, else the default.
inline std::uint64_t resolve_max_vertices(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DBIC_MAX_VERTICES"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidParameters(std::string("DBIC_MAX_VERTICES is not a number: ") + env);
    }
  }
  return kDefaultMaxVertices;
}

/// Human-readable rendering of a JSON object, one key per line.
inline void print_pretty(std::ostream& out, const Json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      print_pretty(out, value, indent + "  ");
    } else if (value.is_array()) {
      out << indent << key << ":";
      for (const auto& item : value) {
        out << ' ' << (item.is_string() ? item.get<std::string>() : item.dump());
      }
      out << '\n';
    } else {
      out << indent << key << ": "
          << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool pretty = false;
  std::optional<std::uint64_t> max_vertices_flag;

  void emit(const Json& j) const {
    if (pretty) {
      print_pretty(out, j);
    } else {
      out << j.dump() << '\n';
    }
  }

  DeBruijnGraph graph(std::uint32_t d, std::uint32_t n) const {
    return DeBruijnGraph::build(d, n, resolve_max_vertices(max_vertices_flag));
  }
};

inline std::vector<std::string> split_labels(std::uint32_t d,
                                             const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    if (d > kMaxDigitAlphabet) {
      out.push_back(item);
      continue;
    }
    std::stringstream ss(item);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (!token.empty()) out.push_back(token);
    }
  }
  return out;
}

// --- graph ------------------------------------------------------------------

struct GraphArgs {
  std::uint32_t d = 0, n = 0;
  std::string dot_path;
  std::vector<std::string> highlight;
};

inline int cmd_graph(const Context& ctx, const GraphArgs& a) {
  const auto g = ctx.graph(a.d, a.n);
  if (!a.dot_path.empty()) {
    const VertexSet highlight = code_set(g, split_labels(a.d, a.highlight));
    std::ofstream file(a.dot_path);
    if (!file) throw InvalidParameters("cannot write DOT file '" + a.dot_path + "'");
    file << export_dot(g, highlight);
  }
  ctx.emit(graph_stats_json(g));
  return kOk;
}

// --- ball -------------------------------------------------------------------

struct BallArgs {
  std::uint32_t d = 0, n = 0;
  unsigned t = 0;
  std::string x;
  std::string method = "bfs";
  std::string rule = "complete";
};

inline int cmd_ball(const Context& ctx, const BallArgs& a) {
  const auto g = ctx.graph(a.d, a.n);
  const VertexId x = g.parse_vertex(a.x);
  const PathRule rule = a.rule == "strict" ? PathRule::kStrict : PathRule::kComplete;

  Json j{{"d", a.d}, {"n", a.n}, {"t", a.t}, {"x", g.label(x).to_string()}, {"method", a.method}};
  std::optional<VertexSet> bfs, closed;
  if (a.method != "closed") bfs = ball_bfs(g, x, a.t);
  if (a.method != "bfs") {
    try {
      closed = ball_closed_form(g.label(x), a.t, rule, g.vertex_count());
    } catch (const NotApplicable& e) {
      ctx.err << "error: " << e.what() << '\n';
      return kNotApplicable;
    }
  }
  const VertexSet& ball = bfs ? *bfs : *closed;
  j["ball"] = vertex_list_json(g, ball);
  j["size"] = ball.size();
  if (bfs && closed) {
    const bool agree = *bfs == *closed;
    j["agree"] = agree;
    if (!agree) {
      j["only_bfs"] = vertex_list_json(g, *bfs - *closed);
      j["only_closed"] = vertex_list_json(g, *closed - *bfs);
      ctx.emit(j);
      ctx.err << "error: BFS and closed-form balls differ\n";
      return kMismatch;
    }
  }
  ctx.emit(j);
  return kOk;
}

// --- check ------------------------------------------------------------------

struct CheckArgs {
  std::uint32_t d = 0, n = 0;
  unsigned t = 0;
};

inline int cmd_check(const Context& ctx, const CheckArgs& a) {
  if (a.t < 1) throw InvalidParameters("t must be >= 1");
  const auto g = ctx.graph(a.d, a.n);
  const auto twins = find_twins(g, a.t);
  Json j{{"d", a.d}, {"n", a.n}, {"t", a.t}, {"identifiable", twins.empty()},
         {"twin_pairs", twins.size()}};
  if (!twins.empty()) j["witness"] = twin_json(g, twins.front());
  ctx.emit(j);
  return twins.empty() ? kOk : kNegative;
}

// --- code -------------------------------------------------------------------

struct CodeArgs {
  std::uint32_t d = 0, n = 0;
  unsigned t = 0;
  bool greedy = false;
  std::string verify_path;
  std::string out_path;
  std::uint64_t budget = MinCodeOptions{}.node_budget;
  std::uint64_t exact_cap = MinCodeOptions{}.exact_cap;
};

inline int cmd_code(const Context& ctx, const CodeArgs& a) {
  if (a.t < 1) throw InvalidParameters("t must be >= 1");
  const auto g = ctx.graph(a.d, a.n);

  if (!a.verify_path.empty()) {
    std::ifstream file(a.verify_path);
    if (!file) throw InvalidParameters("cannot read code file '" + a.verify_path + "'");
    Json parsed;
    try {
      parsed = Json::parse(file);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidParameters(std::string("code file is not valid JSON: ") + e.what());
    }
    const CodeFile cf = parse_code_file(parsed);
    if (cf.d != a.d || cf.n != a.n || cf.t != a.t) {
      throw InvalidParameters("code file is for (d,n,t) = (" + std::to_string(cf.d) + "," +
                              std::to_string(cf.n) + "," + std::to_string(cf.t) + ")");
    }
    const auto report = verify_code(g, code_set(g, cf.code), a.t);
    Json j = graph_params_json(g);
    j["t"] = a.t;
    j["code"] = vertex_list_json(g, code_set(g, cf.code));
    j["report"] = code_report_json(g, report);
    ctx.emit(j);
    return report.valid ? kOk : kNegative;
  }

  VertexSet code;
  bool optimal = false;
  Json j = graph_params_json(g);
  j["t"] = a.t;
  j["method"] = a.greedy ? "greedy" : "exact";
  try {
    if (a.greedy) {
      code = greedy_code(g, a.t);
    } else {
      const auto result = min_code(g, a.t, MinCodeOptions{a.exact_cap, a.budget});
      code = result.code;
      optimal = result.optimal;
      j["nodes"] = result.nodes;
      j["lower_bound"] = result.lower_bound;
    }
  } catch (const InfeasibleNoCode& e) {
    j["identifiable"] = false;
    j["witness"] = twin_json(g, e.twins().front());
    ctx.emit(j);
    ctx.err << "error: " << e.what() << '\n';
    return kNegative;
  }
  j["code"] = vertex_list_json(g, code);
  j["size"] = code.size();
  j["optimal"] = optimal;
  ctx.emit(j);
  if (!a.out_path.empty()) {
    std::ofstream file(a.out_path);
    if (!file) throw InvalidParameters("cannot write code file '" + a.out_path + "'");
    file << code_file_json(g, a.t, code).dump(2) << '\n';
  }
  if (!a.greedy && !optimal) {
    ctx.err << "warning: node budget exhausted; printed code is the best incumbent\n";
    return kBudgetExhausted;
  }
  return kOk;
}

// --- ecc --------------------------------------------------------------------

struct EccArgs {
  std::uint32_t d = 0, n = 0;
  std::string vertex;
  bool all = false;
  bool csv = false;
};

inline int cmd_ecc(const Context& ctx, const EccArgs& a) {
  const auto g = ctx.graph(a.d, a.n);
  std::vector<EccentricityReport> rows;
  if (!a.vertex.empty()) {
    rows.push_back(eccentricity(g, g.parse_vertex(a.vertex)));
  } else if (a.all) {
    rows = all_eccentricities(g);
  } else {
    throw InvalidParameters("ecc needs --vertex <x> or --all");
  }
  std::uint32_t radius = kUnreached, diameter = 0;
  for (const auto& r : rows) {
    radius = std::min(radius, r.eccentricity);
    diameter = std::max(diameter, r.eccentricity);
  }
  if (a.csv) {
    write_eccentricity_csv(ctx.out, g, rows);
    if (a.all) ctx.err << "radius " << radius << ", diameter " << diameter << '\n';
    return kOk;
  }
  if (!a.all) {
    Json j = graph_params_json(g);
    const Json report = eccentricity_json(g, rows.front());
    for (const auto& [key, value] : report.items()) j[key] = value;
    ctx.emit(j);
    return kOk;
  }
  Json j = graph_params_json(g);
  j["radius"] = radius;
  j["diameter"] = diameter;
  Json list = Json::array();
  for (const auto& r : rows) list.push_back(eccentricity_json(g, r));
  j["vertices"] = list;
  ctx.emit(j);
  return kOk;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string ds, ns, ts = "auto";
  std::uint64_t exact_below = SweepOptions{}.exact_below;
  std::uint64_t budget = SweepOptions{}.node_budget;
  unsigned jobs = 1;
  std::string out_path;
};

inline int cmd_sweep(const Context& ctx, const SweepArgs& a) {
  std::optional<std::vector<std::uint32_t>> ts;
  if (a.ts != "auto") ts = parse_int_list(a.ts);
  const auto cells = expand_grid(parse_int_list(a.ds), parse_int_list(a.ns), ts);

  SweepOptions options;
  options.exact_below = a.exact_below;
  options.node_budget = a.budget;
  options.max_vertices = resolve_max_vertices(ctx.max_vertices_flag);
  options.jobs = a.jobs;

  std::ofstream file;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw InvalidParameters("cannot write sweep file '" + a.out_path + "'");
  }
  std::ostream& sink = a.out_path.empty() ? ctx.out : file;
  sink << sweep_csv_header() << '\n' << std::flush;

  std::size_t identifiable = 0, errors = 0;
  run_sweep(cells, options, [&](const SweepRecord& r) {
    sink << to_csv_row(r) << '\n' << std::flush;
    if (r.error) {
      ++errors;
      ctx.err << "cell (" << r.cell.d << "," << r.cell.n << "," << r.cell.t
              << "): " << *r.error << '\n';
    } else if (r.identifiable) {
      ++identifiable;
    }
  });
  ctx.err << "cells " << cells.size() << ", identifiable " << identifiable << ", errors "
          << errors << '\n';
  return kOk;
}

// --- entry point ------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identifying codes on undirected de Bruijn graphs B(d,n)", "dbic"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{out, err, false, std::nullopt};
  std::uint64_t max_vertices = 0;
  bool pretty = false;
  auto* cap_opt = app.add_option("--max-vertices", max_vertices,
                                 "Vertex cap d^n (default: $DBIC_MAX_VERTICES or 1000000)");
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "Graph statistics and DOT export");
  graph->add_option("d", graph_args.d, "Alphabet size")->required();
  graph->add_option("n", graph_args.n, "String length")->required();
  graph->add_option("--dot", graph_args.dot_path, "Write Graphviz DOT to this file");
  graph->add_option("--highlight", graph_args.highlight, "Vertices to fill in the DOT output");

  BallArgs ball_args;
  auto* ball = app.add_subcommand("ball", "Ball B_t(x) by BFS and/or closed form");
  ball->add_option("d", ball_args.d)->required();
  ball->add_option("n", ball_args.n)->required();
  ball->add_option("t", ball_args.t)->required();
  ball->add_option("x", ball_args.x)->required();
  ball->add_option("--method", ball_args.method)
      ->check(CLI::IsMember({"bfs", "closed", "both"}));
  ball->add_option("--rule", ball_args.rule, "Walk constraint set for the closed form")
      ->check(CLI::IsMember({"complete", "strict"}));

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide t-identifiability via twin detection");
  check->add_option("d", check_args.d)->required();
  check->add_option("n", check_args.n)->required();
  check->add_option("t", check_args.t)->required();

  CodeArgs code_args;
  auto* code = app.add_subcommand("code", "Find or verify a t-identifying code");
  code->add_option("d", code_args.d)->required();
  code->add_option("n", code_args.n)->required();
  code->add_option("t", code_args.t)->required();
  auto* exact_flag = code->add_flag("--exact", "Branch-and-bound minimum code (default)");
  code->add_flag("--greedy", code_args.greedy, "Greedy code")->excludes(exact_flag);
  code->add_option("--verify", code_args.verify_path, "Verify the code in this JSON file");
  code->add_option("--out", code_args.out_path, "Write the found code as a JSON code file");
  code->add_option("--budget", code_args.budget, "Node budget above the exact cap");
  code->add_option("--exact-cap", code_args.exact_cap,
                   "Graphs up to this many vertices are searched without a budget");

  EccArgs ecc_args;
  auto* ecc = app.add_subcommand("ecc", "Eccentricity, radius and diameter");
  ecc->add_option("d", ecc_args.d)->required();
  ecc->add_option("n", ecc_args.n)->required();
  auto* vertex_opt = ecc->add_option("--vertex", ecc_args.vertex, "Single vertex");
  ecc->add_flag("--all", ecc_args.all, "Every vertex plus radius/diameter")->excludes(vertex_opt);
  ecc->add_flag("--csv", ecc_args.csv, "CSV rows d,n,vertex,eccentricity,witness");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Identifiability and code-size sweep as CSV");
  sweep->add_option("--d", sweep_args.ds, "Alphabet sizes, e.g. 3 or 2..4")->required();
  sweep->add_option("--n", sweep_args.ns, "String lengths, e.g. 2..5")->required();
  sweep->add_option("--t", sweep_args.ts, "Radii, or auto for 1..n-1");
  sweep->add_option("--exact-below", sweep_args.exact_below,
                    "Run the exact solver when d^n is at most this");
  sweep->add_option("--budget", sweep_args.budget, "Node budget per exact cell");
  sweep->add_option("--jobs", sweep_args.jobs, "Worker threads");
  sweep->add_option("--out", sweep_args.out_path, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code_from_cli = app.exit(e, out, err);
    return code_from_cli == 0 ? kOk : kInvalid;
  }
  ctx.pretty = pretty;
  if (cap_opt->count() > 0) ctx.max_vertices_flag = max_vertices;

  try {
    if (graph->parsed()) return cmd_graph(ctx, graph_args);
    if (ball->parsed()) return cmd_ball(ctx, ball_args);
    if (check->parsed()) return cmd_check(ctx, check_args);
    if (code->parsed()) return cmd_code(ctx, code_args);
    if (ecc->parsed()) return cmd_ecc(ctx, ecc_args);
    if (sweep->parsed()) return cmd_sweep(ctx, sweep_args);
  } catch (const NotApplicable& e) {
    err << "error: " << e.what() << '\n';
    return kNotApplicable;
  } catch (const InfeasibleNoCode& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace dbic::cli

#endif  // DBIC_TOOLS_CLI_HPP
