#ifndef DBIC_TESTS_ORACLES_HPP
#define DBIC_TESTS_ORACLES_HPP

// Independent reference implementations for tests. Nothing here touches the
// library's packed words, shift arithmetic or bitsets: vertices are plain
// digit strings enumerated with an odometer, adjacency is built by string
// slicing, and distances come from textbook BFS over explicit lists.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::string;  // one char per symbol, symbol value = char - '0'

struct Graph {
  int d = 0;
  int n = 0;
  std::vector<Word> words;              // lexicographic order
  std::map<Word, int> index;
  std::vector<std::set<int>> adjacency;  // undirected, no self-loops
};

inline std::vector<Word> all_words(int d, int n) {
  std::vector<Word> out;
  Word w(n, '0');
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == static_cast<char>('0' + d - 1)) {
      w[i] = '0';
      --i;
    }
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

inline Graph build(int d, int n) {
  Graph g;
  g.d = d;
  g.n = n;
  g.words = all_words(d, n);
  for (int i = 0; i < static_cast<int>(g.words.size()); ++i) g.index[g.words[i]] = i;
  g.adjacency.resize(g.words.size());
  // Directed edge set = all words of length n+1: prefix -> suffix.
  for (const Word& e : all_words(d, n + 1)) {
    const int from = g.index.at(e.substr(0, n));
    const int to = g.index.at(e.substr(1));
    if (from == to) continue;
    g.adjacency[from].insert(to);
    g.adjacency[to].insert(from);
  }
  return g;
}

inline std::vector<int> bfs(const Graph& g, int source) {
  std::vector<int> dist(g.words.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.adjacency[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline std::set<int> ball(const Graph& g, int x, int t) {
  std::set<int> out;
  const auto dist = bfs(g, x);
  for (int v = 0; v < static_cast<int>(dist.size()); ++v) {
    if (dist[v] <= t) out.insert(v);
  }
  return out;
}

/// Twin pairs by comparing every pair of balls, no prefilter.
inline std::vector<std::pair<int, int>> twins(const Graph& g, int t) {
  std::vector<std::set<int>> balls;
  for (int v = 0; v < static_cast<int>(g.words.size()); ++v) balls.push_back(ball(g, v, t));
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(balls.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(balls.size()); ++b) {
      if (balls[a] == balls[b]) out.emplace_back(a, b);
    }
  }
  return out;
}

/// Definition check of a code given as a bitmask over at most 64 vertices.
inline bool is_code(const std::vector<std::uint64_t>& ball_masks, std::uint64_t code) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t b : ball_masks) {
    const std::uint64_t sig = b & code;
    if (sig == 0 || !seen.insert(sig).second) return false;
  }
  return true;
}

/// Minimum code size by enumerating all 2^|V| subsets; -1 when none exists.
inline int min_code_size_exhaustive(const Graph& g, int t) {
  const int count = static_cast<int>(g.words.size());
  std::vector<std::uint64_t> masks;
  for (int v = 0; v < count; ++v) {
    std::uint64_t m = 0;
    for (int u : ball(g, v, t)) m |= std::uint64_t{1} << u;
    masks.push_back(m);
  }
  int best = -1;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << count); ++code) {
    const int size = std::popcount(code);
    if (best >= 0 && size >= best) continue;
    if (is_code(masks, code)) best = size;
  }
  return best;
}

}  // namespace oracle

#endif  // DBIC_TESTS_ORACLES_HPP
