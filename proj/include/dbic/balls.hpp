#ifndef DBIC_BALLS_HPP
#define DBIC_BALLS_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "dbic/detail/arith.hpp"
#include "dbic/error.hpp"
#include "dbic/graph.hpp"
#include "dbic/strings.hpp"
#include "dbic/vertex_set.hpp"

namespace dbic {

// ---------------------------------------------------------------------------
// Balls by search
// ---------------------------------------------------------------------------

/// B_t(x): every vertex within undirected distance t of x, x included.
inline VertexSet ball_bfs(const DeBruijnGraph& g, VertexId x, unsigned t) {
  VertexSet seen(g.vertex_count());
  seen.insert(x);
  std::vector<VertexId> frontier{x};
  std::vector<VertexId> next;
  for (unsigned depth = 0; depth < t && !frontier.empty(); ++depth) {
    next.clear();
    for (VertexId u : frontier) {
      g.for_each_adjacent(u, [&](VertexId w) {
        if (!seen.contains(w)) {
          seen.insert(w);
          next.push_back(w);
        }
      });
    }
    frontier.swap(next);
  }
  return seen;
}

/// B_t(x) for every vertex, indexed by id. Large graphs are split across
/// threads; the result does not depend on the split.
inline std::vector<VertexSet> all_balls(const DeBruijnGraph& g, unsigned t,
                                        unsigned threads = 0) {
  const std::uint64_t count = g.vertex_count();
  std::vector<VertexSet> balls(count);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  if (count < 2048 || threads == 1) {
    for (VertexId v = 0; v < count; ++v) balls[v] = ball_bfs(g, v, t);
    return balls;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (VertexId v = w; v < count; v += threads) balls[v] = ball_bfs(g, v, t);
    });
  }
  return balls;
}

// ---------------------------------------------------------------------------
// Closed-form balls
// ---------------------------------------------------------------------------

/// The set [d]^a ⊕ mid ⊕ [d]^b.
struct Pattern {
  std::uint32_t d = 2;
  unsigned prefix_wildcards = 0;
  DBString mid;
  unsigned suffix_wildcards = 0;

  std::size_t length() const noexcept {
    return prefix_wildcards + mid.size() + suffix_wildcards;
  }

  /// d^(a+b)
  std::uint64_t cardinality() const {
    return static_cast<std::uint64_t>(
        detail::pow_or_throw(d, prefix_wildcards + suffix_wildcards));
  }

  bool matches(const DBString& x) const {
    if (x.alphabet_size() != d || x.size() != length()) return false;
    for (std::size_t i = 0; i < mid.size(); ++i) {
      if (x[prefix_wildcards + i] != mid[i]) return false;
    }
    return true;
  }

  /// Inserts every member into `out`, whose universe must be d^length().
  void expand_into(VertexSet& out) const {
    const std::uint64_t suffix_span =
        static_cast<std::uint64_t>(detail::pow_or_throw(d, suffix_wildcards));
    const std::uint64_t mid_span =
        static_cast<std::uint64_t>(detail::pow_or_throw(d, static_cast<std::int64_t>(mid.size())));
    const std::uint64_t prefix_span =
        static_cast<std::uint64_t>(detail::pow_or_throw(d, prefix_wildcards));
    const std::uint64_t base = mid.id() * suffix_span;
    for (std::uint64_t p = 0; p < prefix_span; ++p) {
      const std::uint64_t head = p * mid_span * suffix_span + base;
      for (std::uint64_t s = 0; s < suffix_span; ++s) out.insert(head + s);
    }
  }

  /// "01*" style for d <= 10, "[0,1,*]" otherwise.
  std::string to_string() const {
    if (d <= kMaxDigitAlphabet) {
      return std::string(prefix_wildcards, '*') + mid.to_string() +
             std::string(suffix_wildcards, '*');
    }
    std::string out = "[";
    auto emit = [&](const std::string& token) {
      if (out.size() > 1) out += ',';
      out += token;
    };
    for (unsigned i = 0; i < prefix_wildcards; ++i) emit("*");
    for (std::size_t i = 0; i < mid.size(); ++i) emit(std::to_string(mid[i]));
    for (unsigned i = 0; i < suffix_wildcards; ++i) emit("*");
    return out + "]";
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// FBF walks prepend-drop / append-drop / prepend-drop; BFB the mirror image.
enum class PathKind { kFbf, kBfb };

/// Which constraint set enumerate_path_params() applies.
///
/// kStrict uses the middle leg strictly longer than both outer legs. That set
/// misses vertices once t >= 2: e.g. one prepend followed by one append
/// reaches x1 ... x(n-1) a, a middle leg equal to the first. kComplete keeps
/// the middle leg strictly longer than the first leg but allows it to equal
/// the last leg, which reproduces B_t(x) exactly.
enum class PathRule { kStrict, kComplete };

/// Leg lengths of a three-leg walk. For FBF these are (f, b, g); for BFB
/// they are (b, f, c).
struct PathParams {
  PathKind kind = PathKind::kFbf;
  unsigned first = 0;
  unsigned middle = 0;
  unsigned last = 0;

  unsigned length() const noexcept { return first + middle + last; }

  friend auto operator<=>(const PathParams&, const PathParams&) = default;
};

inline bool admissible(const PathParams& p, unsigned t, PathRule rule) noexcept {
  if (p.length() > t || p.middle <= p.first) return false;
  return rule == PathRule::kStrict ? p.middle > p.last : p.middle >= p.last;
}

/// Every admissible triple of total length <= t, FBF before BFB, each
/// lexicographic in (first, middle, last).
inline std::vector<PathParams> enumerate_path_params(unsigned t,
                                                     PathRule rule = PathRule::kComplete) {
  std::vector<PathParams> out;
  for (PathKind kind : {PathKind::kFbf, PathKind::kBfb}) {
    for (unsigned first = 0; first <= t; ++first) {
      for (unsigned middle = 0; middle <= t - first; ++middle) {
        for (unsigned last = 0; last <= t - first - middle; ++last) {
          const PathParams p{kind, first, middle, last};
          if (admissible(p, t, rule)) out.push_back(p);
        }
      }
    }
  }
  return out;
}

/// The word set reached from x by the walk `p`:
///   FBF (f,b,g): [d]^g ⊕ x_{b-f+1} ... x_{n-f} ⊕ [d]^(b-g)
///   BFB (b,f,c): [d]^(f-c) ⊕ x_{b+1} ... x_{n-f+b} ⊕ [d]^c
/// Throws NotApplicable when the middle segment would have negative length.
inline Pattern pattern_for(const DBString& x, const PathParams& p) {
  const std::size_t n = x.size();
  if (p.middle > n) {
    throw NotApplicable("walk with middle leg " + std::to_string(p.middle) +
                        " exceeds string length " + std::to_string(n));
  }
  if (p.middle < p.last || p.middle < p.first) {
    throw InvalidParameters("middle leg must be at least as long as the outer legs");
  }
  Pattern out;
  out.d = x.alphabet_size();
  if (p.kind == PathKind::kFbf) {
    const unsigned f = p.first, b = p.middle, g = p.last;
    out.prefix_wildcards = g;
    out.mid = x.substring(b - f + 1, n - f);
    out.suffix_wildcards = b - g;
  } else {
    const unsigned b = p.first, f = p.middle, c = p.last;
    out.prefix_wildcards = f - c;
    out.mid = x.substring(b + 1, n - f + b);
    out.suffix_wildcards = c;
  }
  return out;
}

/// {x} ∪ every pattern_for(x, p) over enumerate_path_params(t, rule).
/// Requires n >= t; shorter words throw NotApplicable.
inline VertexSet ball_closed_form(const DBString& x, unsigned t,
                                  PathRule rule = PathRule::kComplete,
                                  std::uint64_t max_vertices = kDefaultMaxVertices) {
  const auto g = DeBruijnGraph::build(x.alphabet_size(), static_cast<std::uint32_t>(x.size()),
                                      max_vertices);
  if (t > x.size()) {
    throw NotApplicable("closed-form ball needs n >= t (n = " + std::to_string(x.size()) +
                        ", t = " + std::to_string(t) + ")");
  }
  VertexSet out(g.vertex_count());
  out.insert(x.id());
  for (const PathParams& p : enumerate_path_params(t, rule)) pattern_for(x, p).expand_into(out);
  return out;
}

// ---------------------------------------------------------------------------
// Prefix counting
// ---------------------------------------------------------------------------

/// Distinct t-prefixes of B_t(x) \ ([d]^t ⊕ x1 ... x(n-t)), from the BFS ball.
inline std::vector<DBString> prefix_set(const DBString& x, unsigned t,
                                        std::uint64_t max_vertices = kDefaultMaxVertices) {
  const std::size_t n = x.size();
  if (t < 1 || n < 2 * static_cast<std::size_t>(t)) {
    throw InvalidParameters("prefix_set needs n >= 2t >= 2 (n = " + std::to_string(n) +
                            ", t = " + std::to_string(t) + ")");
  }
  const auto g = DeBruijnGraph::build(x.alphabet_size(), static_cast<std::uint32_t>(n),
                                      max_vertices);
  const Pattern forward{x.alphabet_size(), t, x.substring(1, n - t), 0};
  const std::uint64_t tail = static_cast<std::uint64_t>(
      detail::pow_or_throw(x.alphabet_size(), static_cast<std::int64_t>(n - t)));
  std::set<VertexId> prefixes;
  ball_bfs(g, x.id(), t).for_each([&](VertexId v) {
    if (!forward.matches(g.label(v))) prefixes.insert(v / tail);
  });
  std::vector<DBString> out;
  for (VertexId p : prefixes) out.push_back(DBString::from_id(x.alphabet_size(), t, p));
  return out;
}

/// Upper bound on |prefix_set| split by the kind of walk producing the prefix.
struct PrefixBoundBreakdown {
  std::uint32_t d = 0;
  unsigned t = 0;
  std::int64_t case1 = 0;  // the word's own prefix
  std::int64_t case2 = 0;  // FBF-type prefixes
  std::int64_t case3 = 0;  // BFB-type prefixes
  std::int64_t total = 0;
};

/// 1 - d^floor(t/2) + 2 * sum_{j=0}^{t-1} d^j
inline std::int64_t prefix_bound_closed_form(std::uint32_t d, unsigned t) {
  using namespace detail;
  return add_or_throw(1 - pow_or_throw(d, t / 2), mul_or_throw(2, power_sum(d, 0, t - 1)));
}

/// Per-case counts. For even t the BFB sum starts at j = t/2; with the range
/// starting one higher the three cases fall 2*d^(t/2) short of the total.
inline PrefixBoundBreakdown prefix_bound(std::uint32_t d, unsigned t) {
  using namespace detail;
  if (d < 2 || t < 1) {
    throw InvalidParameters("prefix_bound needs d >= 2 and t >= 1");
  }
  const std::int64_t dd = d;
  const std::int64_t tt = t;
  PrefixBoundBreakdown out{d, t, 1, 0, 0, 0};
  if (t % 2 == 1) {
    out.case2 = add_or_throw(pow_or_throw(dd, (tt - 1) / 2),
                             mul_or_throw(2, power_sum(dd, 0, (tt - 3) / 2)));
    out.case3 = mul_or_throw(2, power_sum(dd, (tt + 1) / 2, tt - 1));
  } else {
    out.case2 = mul_or_throw(2, power_sum(dd, 0, (tt - 2) / 2));
    out.case3 = add_or_throw(-pow_or_throw(dd, tt / 2),
                             mul_or_throw(2, power_sum(dd, tt / 2, tt - 1)));
  }
  out.total = add_or_throw(add_or_throw(out.case1, out.case2), out.case3);
  return out;
}

/// d^t + d^floor(t/2) - 2 * sum_{j=0}^{t-1} d^j. Positive exactly when a
/// t-prefix outside the bound is guaranteed to exist.
inline std::int64_t g_function(std::uint32_t d, unsigned t) {
  using namespace detail;
  if (d < 2 || t < 1) throw InvalidParameters("g_function needs d >= 2 and t >= 1");
  return add_or_throw(add_or_throw(pow_or_throw(d, t), pow_or_throw(d, t / 2)),
                      -mul_or_throw(2, power_sum(d, 0, t - 1)));
}

}  // namespace dbic

#endif  // DBIC_BALLS_HPP
