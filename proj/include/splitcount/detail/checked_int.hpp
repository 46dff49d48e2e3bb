#pragma once

#include <cstdint>

namespace splitcount::detail {

struct Overflow {};

/// 64-bit integer whose arithmetic throws Overflow instead of wrapping.
/// Hot loops run on this and redo the rare overflowing case in big integers.
struct CheckedI64 {
  std::int64_t v = 0;

  constexpr CheckedI64() = default;
  constexpr CheckedI64(std::int64_t x) : v(x) {} // NOLINT(implicit)

  friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r))
      throw Overflow{};
    return r;
  }
  friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r))
      throw Overflow{};
    return r;
  }
  friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r))
      throw Overflow{};
    return r;
  }
  friend CheckedI64 operator-(CheckedI64 a) { return CheckedI64(0) - a; }
  friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
};

} // namespace splitcount::detail
