#ifndef DBIC_DETAIL_ARITH_HPP
#define DBIC_DETAIL_ARITH_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "dbic/error.hpp"

namespace dbic::detail {

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) return std::nullopt;
  }
  return result;
}

inline std::int64_t pow_or_throw(std::int64_t base, std::int64_t exp) {
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw Overflow(std::to_string(base) + "^" + std::to_string(exp) +
                     " exceeds 64-bit range");
    }
  }
  return result;
}

inline std::int64_t add_or_throw(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow("integer sum exceeds 64-bit range");
  return out;
}

inline std::int64_t mul_or_throw(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow("integer product exceeds 64-bit range");
  return out;
}

/// sum_{j=lo}^{hi} base^j; zero when the range is empty.
inline std::int64_t power_sum(std::int64_t base, std::int64_t lo, std::int64_t hi) {
  std::int64_t total = 0;
  for (std::int64_t j = lo; j <= hi; ++j) total = add_or_throw(total, pow_or_throw(base, j));
  return total;
}

}  // namespace dbic::detail

#endif  // DBIC_DETAIL_ARITH_HPP
