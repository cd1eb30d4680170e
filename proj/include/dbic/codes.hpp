#ifndef DBIC_CODES_HPP
#define DBIC_CODES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dbic/balls.hpp"
#include "dbic/error.hpp"
#include "dbic/graph.hpp"
#include "dbic/vertex_set.hpp"

namespace dbic {

/// x < y with B_t(x) = B_t(y).
struct TwinPair {
  VertexId x = 0;
  VertexId y = 0;
  unsigned t = 0;

  friend auto operator<=>(const TwinPair&, const TwinPair&) = default;
};

/// No t-identifying code exists; `twins` lists the obstruction.
class InfeasibleNoCode : public Error {
 public:
  explicit InfeasibleNoCode(std::vector<TwinPair> twins)
      : Error(describe(twins)), twins_(std::move(twins)) {}

  const std::vector<TwinPair>& twins() const noexcept { return twins_; }

 private:
  static std::string describe(const std::vector<TwinPair>& twins) {
    std::string out = "graph is not identifiable: " + std::to_string(twins.size()) +
                      " twin pair(s)";
    if (!twins.empty()) {
      out += ", first (" + std::to_string(twins.front().x) + ", " +
             std::to_string(twins.front().y) + ")";
    }
    return out;
  }

  std::vector<TwinPair> twins_;
};

/// All twin pairs among precomputed balls, sorted by (x, y).
///
/// Balls are bucketed by hash and compared only within a bucket. Twins are
/// always within distance t of each other (each lies in its own ball), so the
/// bucketing never skips a pair that a distance prefilter would keep.
inline std::vector<TwinPair> find_twins(const std::vector<VertexSet>& balls, unsigned t) {
  std::unordered_map<std::size_t, std::vector<VertexId>> buckets;
  for (VertexId v = 0; v < balls.size(); ++v) buckets[balls[v].hash()].push_back(v);
  std::vector<TwinPair> out;
  for (const auto& [hash, members] : buckets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const VertexId a = members[i], b = members[j];
        if (balls[a] == balls[b]) out.push_back({std::min(a, b), std::max(a, b), t});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<TwinPair> find_twins(const DeBruijnGraph& g, unsigned t) {
  if (t < 1) throw InvalidParameters("twin detection needs t >= 1");
  return find_twins(all_balls(g, t), t);
}

struct Identifiability {
  bool identifiable = false;
  std::optional<TwinPair> witness;  // first twin pair when not identifiable
};

/// A graph is t-identifiable exactly when it has no t-twins.
inline Identifiability is_identifiable(const DeBruijnGraph& g, unsigned t) {
  const auto twins = find_twins(g, t);
  if (twins.empty()) return {true, std::nullopt};
  return {false, twins.front()};
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct CodeReport {
  bool valid = false;
  unsigned t = 0;
  std::size_t code_size = 0;
  /// Vertices x with B_t(x) ∩ S = ∅.
  std::vector<VertexId> domination_failures;
  /// (first, other): `other` has the same identifying set as the smallest
  /// vertex `first` of its class.
  std::vector<std::pair<VertexId, VertexId>> collisions;
};

inline CodeReport verify_code(const std::vector<VertexSet>& balls, const VertexSet& code,
                              unsigned t) {
  CodeReport report;
  report.t = t;
  report.code_size = code.size();
  std::unordered_map<VertexSet, VertexId, VertexSetHash> first_with;
  first_with.reserve(balls.size());
  for (VertexId v = 0; v < balls.size(); ++v) {
    VertexSet signature = balls[v] & code;
    if (signature.empty()) report.domination_failures.push_back(v);
    auto [it, inserted] = first_with.try_emplace(std::move(signature), v);
    if (!inserted) report.collisions.emplace_back(it->second, v);
  }
  report.valid = report.domination_failures.empty() && report.collisions.empty();
  return report;
}

/// Checks both conditions of a t-identifying code: every ball meets S, and
/// no two vertices share B_t(·) ∩ S.
inline CodeReport verify_code(const DeBruijnGraph& g, const VertexSet& code, unsigned t) {
  if (code.universe() != g.vertex_count()) {
    VertexSet resized(g.vertex_count());
    code.for_each([&](VertexId v) {
      if (v >= g.vertex_count()) {
        throw CodeVertexOutOfRange("code vertex " + std::to_string(v) +
                                   " is outside [0, " + std::to_string(g.vertex_count()) +
                                   ")");
      }
      resized.insert(v);
    });
    return verify_code(all_balls(g, t), resized, t);
  }
  return verify_code(all_balls(g, t), code, t);
}

/// Builds a code set from raw ids, rejecting ids outside the graph.
inline VertexSet code_from_ids(const DeBruijnGraph& g, std::span<const VertexId> ids) {
  VertexSet out(g.vertex_count());
  for (VertexId v : ids) {
    if (v >= g.vertex_count()) {
      throw CodeVertexOutOfRange("code vertex " + std::to_string(v) + " is outside [0, " +
                                 std::to_string(g.vertex_count()) + ")");
    }
    out.insert(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hitting-set formulation
// ---------------------------------------------------------------------------

/// S is a code iff it meets every target.
struct SeparationConstraint {
  enum class Kind { kDomination, kSeparation };

  Kind kind = Kind::kDomination;
  VertexId x = 0;
  VertexId y = 0;      // equals x for domination
  VertexSet target;    // B_t(x), or B_t(x) Δ B_t(y)
};

struct ConstraintOptions {
  bool merge_duplicates = true;
};

/// One domination constraint per vertex and one separation constraint per
/// pair at distance <= 2t. Farther pairs are separated by their own centers
/// once domination holds.
inline std::vector<SeparationConstraint> build_constraints(
    const DeBruijnGraph& g, unsigned t, const std::vector<VertexSet>& balls,
    ConstraintOptions options = {}) {
  if (auto twins = find_twins(balls, t); !twins.empty()) {
    throw InfeasibleNoCode(std::move(twins));
  }
  using Kind = SeparationConstraint::Kind;
  std::vector<SeparationConstraint> out;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  auto add = [&](SeparationConstraint c) {
    if (options.merge_duplicates && !seen.insert(c.target).second) return;
    out.push_back(std::move(c));
  };
  for (VertexId x = 0; x < balls.size(); ++x) add({Kind::kDomination, x, x, balls[x]});
  for (VertexId x = 0; x < balls.size(); ++x) {
    ball_bfs(g, x, 2 * t).for_each([&](VertexId y) {
      if (y > x) add({Kind::kSeparation, x, y, balls[x] ^ balls[y]});
    });
  }
  return out;
}

inline std::vector<SeparationConstraint> build_constraints(const DeBruijnGraph& g, unsigned t,
                                                           ConstraintOptions options = {}) {
  return build_constraints(g, t, all_balls(g, t), options);
}

namespace detail {

/// Adds the vertex meeting the most unmet targets until all are met; ties go
/// to the smallest id.
inline VertexSet greedy_hitting_set(std::size_t universe,
                                    const std::vector<VertexSet>& targets) {
  VertexSet chosen(universe);
  std::vector<char> met(targets.size(), 0);
  std::size_t remaining = targets.size();
  std::vector<std::uint64_t> score(universe);
  while (remaining > 0) {
    std::fill(score.begin(), score.end(), 0);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (!met[i]) targets[i].for_each([&](VertexId v) { ++score[v]; });
    }
    const auto best = static_cast<VertexId>(
        std::max_element(score.begin(), score.end()) - score.begin());
    chosen.insert(best);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (!met[i] && targets[i].contains(best)) {
        met[i] = 1;
        --remaining;
      }
    }
  }
  return chosen;
}

/// Drops targets that contain another target; hitting the smaller one
/// already hits them.
inline std::vector<VertexSet> minimal_targets(std::vector<VertexSet> targets) {
  std::stable_sort(targets.begin(), targets.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  std::vector<VertexSet> kept;
  for (auto& candidate : targets) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (k.is_subset_of(candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(candidate));
  }
  return kept;
}

class HittingSetSearch {
 public:
  HittingSetSearch(std::size_t universe, std::vector<VertexSet> targets, VertexSet incumbent,
                   std::uint64_t node_budget)
      : universe_(universe),
        targets_(std::move(targets)),
        best_(std::move(incumbent)),
        best_size_(best_.size()),
        budget_(node_budget) {}

  void run() {
    VertexSet chosen(universe_);
    VertexSet forbidden(universe_);
    std::vector<std::uint32_t> open(targets_.size());
    std::iota(open.begin(), open.end(), 0);
    root_bound_ = lower_bound(open, forbidden);
    search(chosen, 0, forbidden, open);
  }

  const VertexSet& best() const noexcept { return best_; }
  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::size_t root_bound() const noexcept { return root_bound_; }

 private:
  /// Best of two bounds on the vertices still needed: a greedy family of
  /// pairwise-disjoint targets, and the fewest admissible vertices whose
  /// combined target counts reach the number of open targets.
  std::size_t lower_bound(const std::vector<std::uint32_t>& open,
                          const VertexSet& forbidden) const {
    std::vector<std::pair<std::size_t, std::uint32_t>> order;
    order.reserve(open.size());
    std::vector<VertexSet> available;
    available.reserve(open.size());
    std::vector<std::size_t> hits(universe_, 0);
    for (std::uint32_t i : open) {
      available.push_back(targets_[i] - forbidden);
      available.back().for_each([&](VertexId v) { ++hits[v]; });
      order.emplace_back(available.back().size(), static_cast<std::uint32_t>(order.size()));
    }
    std::sort(order.begin(), order.end());
    VertexSet used(universe_);
    std::size_t packing = 0;
    for (const auto& [size, k] : order) {
      if (!available[k].intersects(used)) {
        ++packing;
        used |= available[k];
      }
    }

    // Fractional packing: weight 1 / (largest count in the target) never
    // loads any vertex beyond 1, so the total bounds the fractional optimum.
    double fractional = 0.0;
    for (const auto& a : available) {
      std::size_t heaviest = 0;
      a.for_each([&](VertexId v) { heaviest = std::max(heaviest, hits[v]); });
      fractional += 1.0 / static_cast<double>(heaviest);
    }
    const auto rounded = static_cast<std::size_t>(std::ceil(fractional - 1e-9));

    std::sort(hits.begin(), hits.end(), std::greater<>());
    std::size_t covered = 0, counting = 0;
    while (covered < open.size() && counting < hits.size() && hits[counting] > 0) {
      covered += hits[counting++];
    }
    return std::max({packing, counting, rounded});
  }

  void search(VertexSet& chosen, std::size_t chosen_size, VertexSet& forbidden,
              const std::vector<std::uint32_t>& open_in) {
    if (exhausted_) return;
    if (budget_ != 0 && nodes_ >= budget_) {
      exhausted_ = true;
      return;
    }
    ++nodes_;

    std::vector<std::uint32_t> open;
    open.reserve(open_in.size());
    for (std::uint32_t i : open_in) {
      if (!targets_[i].intersects(chosen)) open.push_back(i);
    }
    if (open.empty()) {
      best_ = chosen;
      best_size_ = chosen_size;
      return;
    }
    if (chosen_size + 1 >= best_size_) return;

    std::uint32_t branch = open.front();
    std::size_t branch_size = SIZE_MAX;
    for (std::uint32_t i : open) {
      const std::size_t size = (targets_[i] - forbidden).size();
      if (size == 0) return;
      if (size < branch_size) {
        branch_size = size;
        branch = i;
      }
    }
    if (chosen_size + lower_bound(open, forbidden) >= best_size_) return;
    if (branch_size == 1) {
      // Forced: the only admissible vertex of this target must be chosen.
      const VertexId v = (targets_[branch] - forbidden).to_vector().front();
      chosen.insert(v);
      search(chosen, chosen_size + 1, forbidden, open);
      chosen.erase(v);
      return;
    }

    // Try the candidates meeting the most open targets first.
    std::vector<std::pair<std::size_t, VertexId>> candidates;
    (targets_[branch] - forbidden).for_each([&](VertexId v) {
      std::size_t hits = 0;
      for (std::uint32_t i : open) hits += targets_[i].contains(v) ? 1 : 0;
      candidates.emplace_back(hits, v);
    });
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    std::vector<VertexId> banned_here;
    for (const auto& [hits, v] : candidates) {
      chosen.insert(v);
      search(chosen, chosen_size + 1, forbidden, open);
      chosen.erase(v);
      if (exhausted_ || chosen_size + 1 >= best_size_) break;
      forbidden.insert(v);
      banned_here.push_back(v);
    }
    for (VertexId v : banned_here) forbidden.erase(v);
  }

  std::size_t universe_;
  std::vector<VertexSet> targets_;
  VertexSet best_;
  std::size_t best_size_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::size_t root_bound_ = 0;
};

}  // namespace detail

/// Greedy upper bound on the minimum code size; always a valid code.
inline VertexSet greedy_code(const DeBruijnGraph& g, unsigned t) {
  std::vector<VertexSet> targets;
  for (auto& c : build_constraints(g, t)) targets.push_back(std::move(c.target));
  return detail::greedy_hitting_set(g.vertex_count(), targets);
}

struct MinCodeOptions {
  /// Graphs up to this many vertices are searched without a node limit.
  std::uint64_t exact_cap = 64;
  /// Node limit above the cap; 0 disables the limit.
  std::uint64_t node_budget = 2'000'000;
};

struct MinCodeResult {
  VertexSet code;
  /// False when the node budget ran out; `code` is then the best incumbent.
  bool optimal = false;
  std::uint64_t nodes = 0;
  std::size_t lower_bound = 0;
};

/// Branch-and-bound over the hitting-set formulation, seeded with the greedy
/// code. The bound is a packing of pairwise-disjoint unmet targets; each node
/// branches on the unmet target with the fewest admissible vertices.
inline MinCodeResult min_code(const DeBruijnGraph& g, unsigned t, MinCodeOptions options = {}) {
  const auto balls = all_balls(g, t);
  std::vector<VertexSet> targets;
  for (auto& c : build_constraints(g, t, balls)) targets.push_back(std::move(c.target));
  VertexSet incumbent = detail::greedy_hitting_set(g.vertex_count(), targets);
  if (targets.size() <= 20000) targets = detail::minimal_targets(std::move(targets));

  const std::uint64_t budget = g.vertex_count() <= options.exact_cap ? 0 : options.node_budget;
  detail::HittingSetSearch search(g.vertex_count(), std::move(targets), std::move(incumbent),
                                  budget);
  search.run();

  MinCodeResult out{search.best(), !search.exhausted(), search.nodes(), search.root_bound()};
  if (!verify_code(balls, out.code, t).valid) {
    throw Error("internal error: branch-and-bound produced an invalid code");
  }
  return out;
}

}  // namespace dbic

#endif  // DBIC_CODES_HPP
