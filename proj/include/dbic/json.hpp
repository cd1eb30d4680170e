#ifndef DBIC_JSON_HPP
#define DBIC_JSON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dbic/codes.hpp"
#include "dbic/error.hpp"
#include "dbic/graph.hpp"
#include "dbic/metrics.hpp"
#include "dbic/vertex_set.hpp"

namespace dbic {

using Json = nlohmann::ordered_json;

inline Json graph_params_json(const DeBruijnGraph& g) { return Json{{"d", g.d()}, {"n", g.n()}}; }

inline DeBruijnGraph graph_from_json(const Json& j,
                                     std::uint64_t max_vertices = kDefaultMaxVertices) {
  try {
    return DeBruijnGraph::build(j.at("d").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(),
                                max_vertices);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameters(std::string("malformed graph parameters: ") + e.what());
  }
}

inline Json graph_stats_json(const DeBruijnGraph& g) {
  return Json{{"d", g.d()},
              {"n", g.n()},
              {"vertices", g.vertex_count()},
              {"edges", g.edges().size()},
              {"loops", g.loops().size()}};
}

/// Sorted vertex labels.
inline Json vertex_list_json(const DeBruijnGraph& g, const VertexSet& s) {
  Json out = Json::array();
  s.for_each([&](VertexId v) { out.push_back(g.label(v).to_string()); });
  return out;
}

/// {"d":…,"n":…,"t":…,"code":["011",…]}
inline Json code_file_json(const DeBruijnGraph& g, unsigned t, const VertexSet& code) {
  return Json{{"d", g.d()}, {"n", g.n()}, {"t", t}, {"code", vertex_list_json(g, code)}};
}

struct CodeFile {
  std::uint32_t d = 0;
  std::uint32_t n = 0;
  unsigned t = 0;
  std::vector<std::string> code;
};

inline CodeFile parse_code_file(const Json& j) {
  try {
    CodeFile out;
    out.d = j.at("d").get<std::uint32_t>();
    out.n = j.at("n").get<std::uint32_t>();
    out.t = j.at("t").get<unsigned>();
    out.code = j.at("code").get<std::vector<std::string>>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameters(std::string("malformed code file: ") + e.what());
  }
}

/// Code vertices as a set over g; a label of the wrong length or alphabet
/// is out of range for the graph.
inline VertexSet code_set(const DeBruijnGraph& g, const std::vector<std::string>& labels) {
  VertexSet out(g.vertex_count());
  for (const auto& label : labels) {
    const DBString x = DBString::parse(g.d(), label);
    if (x.size() != g.n()) {
      throw CodeVertexOutOfRange("code vertex '" + label + "' is not a vertex of B(" +
                                 std::to_string(g.d()) + "," + std::to_string(g.n()) + ")");
    }
    out.insert(x.id());
  }
  return out;
}

inline Json twin_json(const DeBruijnGraph& g, const TwinPair& twin) {
  return Json{{"x", g.label(twin.x).to_string()},
              {"y", g.label(twin.y).to_string()},
              {"t", twin.t}};
}

inline Json code_report_json(const DeBruijnGraph& g, const CodeReport& report) {
  Json failures = Json::array();
  for (VertexId v : report.domination_failures) failures.push_back(g.label(v).to_string());
  Json collisions = Json::array();
  for (const auto& [a, b] : report.collisions) {
    collisions.push_back(Json::array({g.label(a).to_string(), g.label(b).to_string()}));
  }
  return Json{{"valid", report.valid},
              {"t", report.t},
              {"code_size", report.code_size},
              {"domination_failures", failures},
              {"collisions", collisions}};
}

inline Json eccentricity_json(const DeBruijnGraph& g, const EccentricityReport& r) {
  return Json{{"vertex", g.label(r.vertex).to_string()},
              {"eccentricity", r.eccentricity},
              {"witness", g.label(r.witness).to_string()}};
}

}  // namespace dbic

#endif  // DBIC_JSON_HPP
