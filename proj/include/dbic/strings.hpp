#ifndef DBIC_STRINGS_HPP
#define DBIC_STRINGS_HPP

#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dbic/error.hpp"

namespace dbic {

/// Index of a vertex of B(d,n): the big-endian base-d value of its label.
using VertexId = std::uint64_t;

/// Alphabets up to this size print as contiguous digit strings.
inline constexpr std::uint32_t kMaxDigitAlphabet = 10;

/// The symbol set [d] = {0, ..., d-1}, d >= 2.
class Alphabet {
 public:
  explicit Alphabet(std::uint32_t size) : size_(size) {
    if (size < 2) {
      throw InvalidParameters("alphabet size d must satisfy d >= 2 (got " +
                              std::to_string(size) + ")");
    }
  }

  std::uint32_t size() const noexcept { return size_; }

  /// Bits needed to pack one symbol, ceil(log2 d).
  unsigned bits_per_symbol() const noexcept {
    return static_cast<unsigned>(std::bit_width(size_ - 1));
  }

  /// Longest word that still packs into 64 bits.
  std::size_t max_length() const noexcept { return 64 / bits_per_symbol(); }

  bool contains(std::uint32_t symbol) const noexcept { return symbol < size_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t size_;
};

/// A word x1 x2 ... xn over [d], packed into a single machine word.
///
/// Symbols are addressed 0-based through operator[]; substring() follows the
/// 1-based inclusive convention used when talking about x_i ... x_j. Length 0
/// is allowed so that empty segments can be represented.
class DBString {
 public:
  DBString() = default;

  DBString(std::uint32_t d, std::span<const std::uint32_t> digits)
      : d_(Alphabet(d).size()), n_(static_cast<std::uint32_t>(digits.size())) {
    const Alphabet alphabet(d);
    if (digits.size() > alphabet.max_length()) {
      throw InvalidParameters(
          "word of length " + std::to_string(digits.size()) +
          " does not pack into 64 bits for d = " + std::to_string(d) +
          " (max length " + std::to_string(alphabet.max_length()) + ")");
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (!alphabet.contains(digits[i])) {
        throw InvalidParameters("symbol " + std::to_string(digits[i]) +
                                " at position " + std::to_string(i + 1) +
                                " is outside [0, " + std::to_string(d) + ")");
      }
      set(i, digits[i]);
    }
  }

  DBString(std::uint32_t d, std::initializer_list<std::uint32_t> digits)
      : DBString(d, std::span<const std::uint32_t>(digits.begin(), digits.size())) {}

  /// Inverse of id(): the length-n word whose base-d value is `id`.
  static DBString from_id(std::uint32_t d, std::size_t n, VertexId id) {
    std::vector<std::uint32_t> digits(n);
    for (std::size_t i = n; i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(id % d);
      id /= d;
    }
    if (id != 0) {
      throw InvalidParameters("vertex id does not fit in " + std::to_string(n) +
                              " symbols over d = " + std::to_string(d));
    }
    return DBString(d, digits);
  }

  /// Parses either a contiguous digit string (d <= 10) or a comma-separated
  /// list of integers (d > 10).
  static DBString parse(std::uint32_t d, std::string_view text) {
    const Alphabet alphabet(d);
    std::vector<std::uint32_t> digits;
    if (d <= kMaxDigitAlphabet) {
      for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') {
          throw ParseError(std::string("unexpected character '") + c + "'", i + 1);
        }
        const auto symbol = static_cast<std::uint32_t>(c - '0');
        if (!alphabet.contains(symbol)) {
          throw ParseError("symbol " + std::to_string(symbol) +
                               " is outside [0, " + std::to_string(d) + ")",
                           i + 1);
        }
        digits.push_back(symbol);
      }
    } else if (!text.empty()) {
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        if (end == start) throw ParseError("empty symbol", start + 1);
        std::uint64_t value = 0;
        for (std::size_t i = start; i < end; ++i) {
          const char c = text[i];
          if (c < '0' || c > '9') {
            throw ParseError(std::string("unexpected character '") + c + "'", i + 1);
          }
          value = value * 10 + static_cast<std::uint64_t>(c - '0');
          if (value >= d) {
            throw ParseError("symbol is outside [0, " + std::to_string(d) + ")",
                             start + 1);
          }
        }
        digits.push_back(static_cast<std::uint32_t>(value));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    if (digits.size() > alphabet.max_length()) {
      throw ParseError("word does not pack into 64 bits", alphabet.max_length() + 1);
    }
    return DBString(d, digits);
  }

  std::uint32_t alphabet_size() const noexcept { return d_; }
  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  std::uint32_t operator[](std::size_t i) const noexcept {
    const unsigned w = bits();
    return static_cast<std::uint32_t>((packed_ >> (i * w)) & ((std::uint64_t{1} << w) - 1));
  }

  std::vector<std::uint32_t> digits() const {
    std::vector<std::uint32_t> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)[i];
    return out;
  }

  /// Big-endian base-d value, x1 most significant.
  VertexId id() const noexcept {
    VertexId value = 0;
    for (std::size_t i = 0; i < n_; ++i) value = value * d_ + (*this)[i];
    return value;
  }

  /// x_i ... x_j, 1-based and inclusive; i == j + 1 yields the empty word.
  DBString substring(std::size_t i, std::size_t j) const {
    if (i < 1 || i > j + 1 || j > n_) {
      throw IndexError("substring(" + std::to_string(i) + ", " + std::to_string(j) +
                       ") requires 1 <= i <= j+1 <= n+1 with n = " +
                       std::to_string(n_));
    }
    DBString out;
    out.d_ = d_;
    out.n_ = static_cast<std::uint32_t>(j + 1 - i);
    for (std::size_t k = 0; k < out.n_; ++k) out.set(k, (*this)[i - 1 + k]);
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (d_ <= kMaxDigitAlphabet) {
        out.push_back(static_cast<char>('0' + (*this)[i]));
      } else {
        if (i > 0) out.push_back(',');
        out += std::to_string((*this)[i]);
      }
    }
    return out;
  }

  friend bool operator==(const DBString&, const DBString&) = default;

  /// Same-alphabet words compare by length, then lexicographically.
  friend std::strong_ordering operator<=>(const DBString& a, const DBString& b) {
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.id() <=> b.id();
  }

 private:
  unsigned bits() const noexcept {
    return static_cast<unsigned>(std::bit_width(d_ - 1));
  }

  void set(std::size_t i, std::uint32_t symbol) noexcept {
    const unsigned w = bits();
    const std::uint64_t mask = ((std::uint64_t{1} << w) - 1) << (i * w);
    packed_ = (packed_ & ~mask) | (static_cast<std::uint64_t>(symbol) << (i * w));
  }

  std::uint32_t d_ = 2;
  std::uint32_t n_ = 0;
  std::uint64_t packed_ = 0;
};

inline VertexId encode(const DBString& x) noexcept { return x.id(); }

inline DBString decode(std::uint32_t d, std::size_t n, VertexId id) {
  return DBString::from_id(d, n, id);
}

/// x ⊕ y over a shared alphabet.
inline DBString concat(const DBString& x, const DBString& y) {
  if (x.alphabet_size() != y.alphabet_size()) {
    throw InvalidParameters("cannot concatenate words over different alphabets");
  }
  std::vector<std::uint32_t> digits = x.digits();
  for (std::size_t i = 0; i < y.size(); ++i) digits.push_back(y[i]);
  return DBString(x.alphabet_size(), digits);
}

/// { x2 ... xn a : a in [d] }: out-neighbors in the directed graph, ordered by a.
inline std::vector<DBString> right_shifts(const DBString& x) {
  if (x.empty()) throw InvalidParameters("shifts of the empty word are undefined");
  std::vector<DBString> out;
  std::vector<std::uint32_t> digits = x.digits();
  digits.erase(digits.begin());
  digits.push_back(0);
  for (std::uint32_t a = 0; a < x.alphabet_size(); ++a) {
    digits.back() = a;
    out.emplace_back(x.alphabet_size(), digits);
  }
  return out;
}

/// { a x1 ... x(n-1) : a in [d] }: in-neighbors in the directed graph, ordered by a.
inline std::vector<DBString> left_shifts(const DBString& x) {
  if (x.empty()) throw InvalidParameters("shifts of the empty word are undefined");
  std::vector<DBString> out;
  std::vector<std::uint32_t> digits = x.digits();
  digits.pop_back();
  digits.insert(digits.begin(), 0);
  for (std::uint32_t a = 0; a < x.alphabet_size(); ++a) {
    digits.front() = a;
    out.emplace_back(x.alphabet_size(), digits);
  }
  return out;
}

}  // namespace dbic

#endif  // DBIC_STRINGS_HPP
