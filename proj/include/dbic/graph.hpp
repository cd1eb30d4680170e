#ifndef DBIC_GRAPH_HPP
#define DBIC_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dbic/detail/arith.hpp"
#include "dbic/error.hpp"
#include "dbic/strings.hpp"
#include "dbic/vertex_set.hpp"

namespace dbic {

inline constexpr std::uint64_t kDefaultMaxVertices = 1'000'000;

/// Undirected edge {u, v} with u <= v.
struct Edge {
  VertexId u;
  VertexId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The undirected de Bruijn graph B(d,n) on all length-n words over [d].
///
/// Nothing is stored beyond the parameters: adjacency comes from the shift
/// algebra on vertex ids. Self-loops (the words a^n) are kept out of
/// neighbors() because they never change a distance; has_loop() and
/// export_dot() still report them.
class DeBruijnGraph {
 public:
  static DeBruijnGraph build(std::uint32_t d, std::uint32_t n,
                             std::uint64_t max_vertices = kDefaultMaxVertices) {
    if (d < 2) {
      throw InvalidParameters("B(" + std::to_string(d) + "," + std::to_string(n) +
                              "): alphabet size must satisfy d >= 2");
    }
    if (n < 1) {
      throw InvalidParameters("B(" + std::to_string(d) + "," + std::to_string(n) +
                              "): string length must satisfy n >= 1");
    }
    const auto count = detail::checked_pow(d, n);
    if (!count || *count > max_vertices) {
      throw InvalidParameters("B(" + std::to_string(d) + "," + std::to_string(n) +
                              "): d^n exceeds the vertex cap of " +
                              std::to_string(max_vertices));
    }
    if (n > Alphabet(d).max_length()) {
      throw InvalidParameters("B(" + std::to_string(d) + "," + std::to_string(n) +
                              "): labels do not pack into 64 bits");
    }
    return DeBruijnGraph(d, n, *count);
  }

  std::uint32_t d() const noexcept { return d_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t vertex_count() const noexcept { return count_; }

  /// x2 ... xn a
  VertexId right_shift(VertexId v, std::uint32_t a) const noexcept {
    return (v % tail_) * d_ + a;
  }

  /// a x1 ... x(n-1)
  VertexId left_shift(VertexId v, std::uint32_t a) const noexcept {
    return a * tail_ + v / d_;
  }

  /// Calls f(u) for every shift u != v. A neighbor reachable both ways is
  /// visited twice; callers that care use neighbors() instead.
  template <typename F>
  void for_each_adjacent(VertexId v, F&& f) const {
    for (std::uint32_t a = 0; a < d_; ++a) {
      const VertexId r = right_shift(v, a);
      if (r != v) f(r);
      const VertexId l = left_shift(v, a);
      if (l != v) f(l);
    }
  }

  /// Distinct non-self neighbors in increasing order.
  std::vector<VertexId> neighbor_list(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(2 * d_);
    for_each_adjacent(v, [&](VertexId u) { out.push_back(u); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  VertexSet neighbors(VertexId v) const {
    VertexSet out(count_);
    for_each_adjacent(v, [&](VertexId u) { out.insert(u); });
    return out;
  }

  /// True for the constant words a^n, which carry a directed self-loop.
  bool has_loop(VertexId v) const noexcept { return right_shift(v, v % d_) == v; }

  /// Vertices u != v with both directed edges v -> u and u -> v.
  std::vector<VertexId> two_cycle_partners(VertexId v) const {
    std::vector<VertexId> out;
    for (std::uint32_t a = 0; a < d_; ++a) {
      const VertexId u = right_shift(v, a);
      if (u == v) continue;
      for (std::uint32_t b = 0; b < d_; ++b) {
        if (right_shift(u, b) == v) {
          out.push_back(u);
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Every undirected non-loop edge once, sorted, obtained by collapsing the
  /// d^(n+1) directed edges x1 ... x(n+1).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(count_ * d_);
    for (VertexId e = 0; e < count_ * d_; ++e) {
      const VertexId from = e / d_;
      const VertexId to = e % count_;
      if (from == to) continue;
      out.push_back(Edge{std::min(from, to), std::max(from, to)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<VertexId> loops() const {
    std::vector<VertexId> out;
    for (std::uint32_t a = 0; a < d_; ++a) {
      VertexId v = 0;
      for (std::uint32_t i = 0; i < n_; ++i) v = v * d_ + a;
      out.push_back(v);
    }
    return out;
  }

  DBString label(VertexId v) const { return DBString::from_id(d_, n_, v); }

  /// Vertex id of a word; the word must live in this graph.
  VertexId vertex(const DBString& x) const {
    if (x.alphabet_size() != d_ || x.size() != n_) {
      throw InvalidParameters("word '" + x.to_string() + "' is not a vertex of B(" +
                              std::to_string(d_) + "," + std::to_string(n_) + ")");
    }
    return x.id();
  }

  VertexId parse_vertex(std::string_view text) const {
    return vertex(DBString::parse(d_, text));
  }

 private:
  DeBruijnGraph(std::uint32_t d, std::uint32_t n, std::uint64_t count)
      : d_(d), n_(n), count_(count), tail_(count / d) {}

  std::uint32_t d_;
  std::uint32_t n_;
  std::uint64_t count_;
  std::uint64_t tail_;  // d^(n-1)
};

/// Graphviz rendering: one stanza per vertex in id order, highlighted
/// vertices filled, loops drawn on the constant words.
inline std::string export_dot(const DeBruijnGraph& g, const VertexSet& highlight) {
  std::ostringstream out;
  out << "graph \"B(" << g.d() << "," << g.n() << ")\" {\n";
  out << "  node [shape=circle];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.label(v).to_string() << "\"";
    if (highlight.contains(v)) out << " [style=filled, fillcolor=black, fontcolor=white]";
    out << ";\n";
  }
  std::vector<Edge> all = g.edges();
  for (VertexId v : g.loops()) all.push_back(Edge{v, v});
  std::sort(all.begin(), all.end());
  for (const Edge& e : all) {
    out << "  \"" << g.label(e.u).to_string() << "\" -- \"" << g.label(e.v).to_string()
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dbic

#endif  // DBIC_GRAPH_HPP
