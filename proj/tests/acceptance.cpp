// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dbic/dbic.hpp"
#include "oracles.hpp"

namespace {

using namespace dbic;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first counterexample
    pass = false;
  }
};

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "dbic");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  return code;
}

std::string cell(std::uint32_t d, std::uint32_t n, unsigned t) {
  return "(" + std::to_string(d) + "," + std::to_string(n) + "," + std::to_string(t) + ")";
}

void check_identifiable(Outcome& o, std::uint32_t d, std::uint32_t n, unsigned t) {
  std::string out;
  const int code = run_cli({"check", std::to_string(d), std::to_string(n), std::to_string(t)}, &out);
  if (code != 0 || !Json::parse(out).at("identifiable").get<bool>()) {
    o.fail("not identifiable at " + cell(d, n, t));
  }
}

Outcome criterion1() {
  Outcome o;
  for (std::uint32_t n = 2; n <= 6; ++n) check_identifiable(o, 3, n, 1);
  for (std::uint32_t n = 4; n <= 6; ++n) check_identifiable(o, 3, n, 2);
  for (std::uint32_t n = 2; n <= 4; ++n) check_identifiable(o, 4, n, 1);
  check_identifiable(o, 4, 4, 2);
  for (std::uint32_t n = 2; n <= 3; ++n) check_identifiable(o, 5, n, 1);
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (std::uint32_t d = 3; d <= 5; ++d) {
    if (!is_identifiable(DeBruijnGraph::build(d, 3), 2).identifiable) {
      o.fail("twins in B(" + std::to_string(d) + ",3) at t=2");
    }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (std::uint32_t n = 3; n <= 10; ++n) {
    if (!is_identifiable(DeBruijnGraph::build(2, n), 1).identifiable) {
      o.fail("twins in B(2," + std::to_string(n) + ") at t=1");
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto g = DeBruijnGraph::build(2, 3);
  const auto code = code_set(g, {"001", "010", "011", "101"});
  if (!verify_code(g, code, 1).valid) o.fail("reference code rejected");
  const auto result = min_code(g, 1);
  if (result.code.size() != 4 || !result.optimal) {
    o.fail("min_code size " + std::to_string(result.code.size()) +
           (result.optimal ? " (optimal)" : " (not proven optimal)"));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint32_t d = 2; d <= 4; ++d) {
    for (unsigned t = 1; t <= 2; ++t) {
      for (std::uint32_t n = 2 * t; n <= 6; ++n) {
        const auto count = detail::checked_pow(d, n);
        if (!count || *count > 4096) continue;
        const auto g = DeBruijnGraph::build(d, n);
        for (VertexId v = 0; v < g.vertex_count(); ++v, ++checked) {
          if (ball_closed_form(g.label(v), t) != ball_bfs(g, v, t)) {
            o.fail("mismatch at x=" + g.label(v).to_string() + " " + cell(d, n, t));
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " balls compared";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::uint32_t d = 3; d <= 4; ++d) {
    for (unsigned t = 1; t <= 2; ++t) {
      const std::int64_t bound = prefix_bound(d, t).total;
      for (std::uint32_t n = 2 * t; n <= 6; ++n) {
        const auto g = DeBruijnGraph::build(d, n);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          const auto size = static_cast<std::int64_t>(prefix_set(g.label(v), t).size());
          if (size > bound) {
            o.fail("|P| = " + std::to_string(size) + " > " + std::to_string(bound) +
                   " at x=" + g.label(v).to_string() + " " + cell(d, n, t));
          }
        }
      }
    }
  }
  for (std::uint32_t d = 2; d <= 6; ++d) {
    for (unsigned t = 1; t <= 8; ++t) {
      const auto b = prefix_bound(d, t);
      if (b.case1 + b.case2 + b.case3 != b.total ||
          b.total != prefix_bound_closed_form(d, t)) {
        o.fail("recombination fails at d=" + std::to_string(d) + " t=" + std::to_string(t));
      }
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (std::uint32_t d = 3; d <= 6; ++d) {
    for (unsigned t = 1; t <= 12; ++t) {
      if (g_function(d, t) <= 0) {
        o.fail("g(" + std::to_string(d) + "," + std::to_string(t) + ") <= 0");
      }
    }
  }
  if (g_function(2, 4) != -10) o.fail("g(2,4) = " + std::to_string(g_function(2, 4)));
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto sweep = [&](std::uint32_t d, std::uint32_t n) {
    const auto g = DeBruijnGraph::build(d, n);
    for (VertexId y = 0; y < g.vertex_count(); ++y) {
      const auto label = g.label(y).to_string();
      if (eccentricity(g, y).eccentricity != n) {
        o.fail("ecc(" + label + ") != " + std::to_string(n));
      }
      const DBString x = construct_antipodal(g.label(y));
      if (distance(g, y, x.id()) != n) {
        o.fail("antipode of " + label + " at distance " + std::to_string(distance(g, y, x.id())));
      }
    }
  };
  for (std::uint32_t n = 2; n <= 6; ++n) sweep(3, n);
  for (std::uint32_t n = 2; n <= 4; ++n) sweep(4, n);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto g = DeBruijnGraph::build(2, 3);
  const auto e = eccentricity(g, g.parse_vertex("011")).eccentricity;
  const auto [radius, diameter] = radius_diameter(g);
  if (e != 2) o.fail("ecc(011) = " + std::to_string(e));
  if (radius != 2 || diameter != 3) {
    o.fail("radius/diameter = (" + std::to_string(radius) + "," + std::to_string(diameter) + ")");
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::pair<std::uint32_t, std::uint32_t> graphs[] = {{2, 1}, {2, 2}, {3, 1},
                                                            {2, 3}, {2, 4}, {4, 1}};
  for (const auto& [d, n] : graphs) {
    const auto g = DeBruijnGraph::build(d, n);
    const int expected =
        oracle::min_code_size_exhaustive(oracle::build(static_cast<int>(d), static_cast<int>(n)), 1);
    const bool twins = !find_twins(g, 1).empty();
    if ((expected < 0) != twins) {
      o.fail("exhaustive search and find_twins disagree on " + cell(d, n, 1));
      continue;
    }
    if (expected < 0) {
      try {
        (void)min_code(g, 1);
        o.fail("min_code did not raise on " + cell(d, n, 1));
      } catch (const InfeasibleNoCode&) {
      }
      continue;
    }
    const auto result = min_code(g, 1);
    if (static_cast<int>(result.code.size()) != expected || !result.optimal) {
      o.fail("min_code " + std::to_string(result.code.size()) + " vs exhaustive " +
             std::to_string(expected) + " on " + cell(d, n, 1));
    }
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  std::string out;
  const auto start = std::chrono::steady_clock::now();
  const int code = run_cli({"sweep", "--d", "3", "--n", "2..5", "--t", "auto"}, &out);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (code != 0) o.fail("sweep exited with " + std::to_string(code));
  std::istringstream lines(out);
  std::string line;
  std::getline(lines, line);  // header
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() < 4 || fields[3] != "true") o.fail("cell not identifiable: " + line);
  }
  if (rows != 10) o.fail("expected 10 cells, got " + std::to_string(rows));
  if (seconds >= 300) o.fail("took " + std::to_string(seconds) + " s");
  if (o.pass) {
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << rows << " cells in " << seconds << " s";
    o.detail = d.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"identifiability grid (d=3..5)", criterion1},
      {"B(d,3) 2-identifiable, d=3..5", criterion2},
      {"B(2,n) 1-identifiable, n=3..10", criterion3},
      {"minimum 1-identifying code of B(2,3)", criterion4},
      {"closed-form balls equal BFS balls", criterion5},
      {"prefix-count bound and case recombination", criterion6},
      {"g(d,t) sign", criterion7},
      {"eccentricity n and antipodal witnesses", criterion8},
      {"B(2,3) eccentricity, radius, diameter", criterion9},
      {"solver vs exhaustive search", criterion10},
      {"ternary sweep n=2..5", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu: %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
