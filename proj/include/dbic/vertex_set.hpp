#ifndef DBIC_VERTEX_SET_HPP
#define DBIC_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dbic/strings.hpp"

namespace dbic {

/// Dense bitset over the vertex slots [0, universe) of one graph.
///
/// Binary operators require both operands to share a universe.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  template <typename Range>
  static VertexSet of(std::size_t universe, const Range& ids) {
    VertexSet s(universe);
    for (VertexId v : ids) s.insert(v);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(VertexId v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  void insert(VertexId v) noexcept {
    assert(v < universe_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(VertexId v) noexcept {
    assert(v < universe_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t size() const noexcept {
    std::size_t count = 0;
    for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
  }

  bool empty() const noexcept {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& other) noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& other) noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  VertexSet& operator^=(const VertexSet& other) noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Calls f(v) for every member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<VertexId>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Hash of the canonical word encoding; equal sets hash equally.
  std::size_t hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void trim() noexcept {
    if (universe_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace dbic

#endif  // DBIC_VERTEX_SET_HPP
