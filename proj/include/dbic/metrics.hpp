#ifndef DBIC_METRICS_HPP
#define DBIC_METRICS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dbic/error.hpp"
#include "dbic/graph.hpp"
#include "dbic/strings.hpp"
#include "dbic/vertex_set.hpp"

namespace dbic {

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

/// Single-source BFS row: distance from `source` to every vertex.
inline std::vector<std::uint32_t> distances_from(const DeBruijnGraph& g, VertexId source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreached);
  std::vector<VertexId> frontier{source};
  std::vector<VertexId> next;
  dist[source] = 0;
  for (std::uint32_t depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (VertexId u : frontier) {
      g.for_each_adjacent(u, [&](VertexId w) {
        if (dist[w] == kUnreached) {
          dist[w] = depth;
          next.push_back(w);
        }
      });
    }
    frontier.swap(next);
  }
  return dist;
}

/// Shortest undirected path length; 0 iff x == y.
inline std::uint32_t distance(const DeBruijnGraph& g, VertexId x, VertexId y) {
  if (x == y) return 0;
  VertexSet seen(g.vertex_count());
  seen.insert(x);
  std::vector<VertexId> frontier{x};
  std::vector<VertexId> next;
  for (std::uint32_t depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (VertexId u : frontier) {
      bool found = false;
      g.for_each_adjacent(u, [&](VertexId w) {
        if (w == y) found = true;
        if (!seen.contains(w)) {
          seen.insert(w);
          next.push_back(w);
        }
      });
      if (found) return depth;
    }
    frontier.swap(next);
  }
  return kUnreached;
}

struct EccentricityReport {
  VertexId vertex = 0;
  std::uint32_t eccentricity = 0;
  VertexId witness = 0;  // smallest id at maximum distance

  friend bool operator==(const EccentricityReport&, const EccentricityReport&) = default;
};

inline EccentricityReport eccentricity(const DeBruijnGraph& g, VertexId y) {
  const auto dist = distances_from(g, y);
  EccentricityReport out{y, 0, y};
  for (VertexId v = 0; v < dist.size(); ++v) {
    if (dist[v] > out.eccentricity) {
      out.eccentricity = dist[v];
      out.witness = v;
    }
  }
  return out;
}

/// One report per vertex, in id order.
inline std::vector<EccentricityReport> all_eccentricities(const DeBruijnGraph& g) {
  std::vector<EccentricityReport> out;
  out.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(eccentricity(g, v));
  return out;
}

/// (radius, diameter) over all-pairs BFS.
inline std::pair<std::uint32_t, std::uint32_t> radius_diameter(const DeBruijnGraph& g) {
  std::uint32_t radius = kUnreached;
  std::uint32_t diameter = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t e = eccentricity(g, v).eccentricity;
    radius = std::min(radius, e);
    diameter = std::max(diameter, e);
  }
  return {radius, diameter};
}

namespace detail {

inline std::uint32_t smallest_symbol_except(std::uint32_t d,
                                            std::initializer_list<std::uint32_t> banned) {
  for (std::uint32_t a = 0; a < d; ++a) {
    if (std::find(banned.begin(), banned.end(), a) == banned.end()) return a;
  }
  // d >= 3 and at most two exclusions per call.
  throw Error("no admissible symbol left");
}

inline std::vector<std::uint32_t> antipodal_digits(const DBString& y) {
  const std::uint32_t d = y.alphabet_size();
  const std::size_t n = y.size();
  if (n == 1) return {smallest_symbol_except(d, {y[0]})};
  if (n == 2) {
    const std::uint32_t z = smallest_symbol_except(d, {y[0], y[1]});
    return {z, z};
  }
  if (n == 3) {
    for (std::uint32_t a = 0; a < d; ++a) {
      if (a != y[0] && a != y[1] && a != y[2]) return {a, a, a};
    }
    return {y[1], y[1], y[1]};
  }
  // y = y0 ⊕ inner ⊕ y(n+1): recurse on the inner word, then pad with
  // x0 ∉ {last two symbols of y} and x(n+1) ∉ {first two symbols of y}.
  std::vector<std::uint32_t> x = antipodal_digits(y.substring(2, n - 1));
  x.insert(x.begin(), smallest_symbol_except(d, {y[n - 2], y[n - 1]}));
  x.push_back(smallest_symbol_except(d, {y[0], y[1]}));
  return x;
}

}  // namespace detail

/// A vertex at distance exactly n from y in B(d,n), d >= 3.
///
/// Descends two symbols at a time: even n bottoms out at n = 2 (zz with z
/// unused by y), odd n at n = 3 (a^3 for an unused a, else (y2)^3), and n = 1
/// at any other symbol. Every free choice takes the smallest admissible
/// symbol.
inline DBString construct_antipodal(const DBString& y) {
  if (y.alphabet_size() < 3) {
    throw InvalidParameters("construct_antipodal needs d >= 3 (got d = " +
                            std::to_string(y.alphabet_size()) + ")");
  }
  if (y.empty()) throw InvalidParameters("construct_antipodal needs n >= 1");
  return DBString(y.alphabet_size(), detail::antipodal_digits(y));
}

inline void write_eccentricity_csv(std::ostream& out, const DeBruijnGraph& g,
                                   const std::vector<EccentricityReport>& rows,
                                   bool header = true) {
  if (header) out << "d,n,vertex,eccentricity,witness\n";
  for (const auto& r : rows) {
    out << g.d() << ',' << g.n() << ",\"" << g.label(r.vertex).to_string() << "\","
        << r.eccentricity << ",\"" << g.label(r.witness).to_string() << "\"\n";
  }
}

}  // namespace dbic

#endif  // DBIC_METRICS_HPP
