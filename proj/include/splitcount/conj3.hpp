#pragma once

#include <array>
#include <cstdint>

#include "splitcount/integer_matrix.hpp"

// Closed-form 3x3 conjugation formulas.
//
//   T(a,b,c) = [[-1,a,b],[0,-1,c],[0,0,1]]   mixed, chi = (x+1)^2 (x-1)
//   U(a,b,c) = [[ 1,a,b],[0, 1,c],[0,0,1]]   unipotent, chi = (x-1)^3
//   L(u,v,w) = [[1,0,0],[u,1,0],[v,w,1]]
namespace splitcount::conj3 {

struct TriParams {
  Integer a, b, c;
  friend bool operator==(const TriParams &, const TriParams &) = default;
};

struct LowerParams {
  Integer u, v, w;
};

IntegerMatrix mixed_matrix(const TriParams &t);     // T(a,b,c)
IntegerMatrix unipotent_matrix(const TriParams &t); // U(a,b,c)
IntegerMatrix lower_matrix(const LowerParams &l);   // L(u,v,w)
IntegerMatrix lower_inverse(const LowerParams &l);  // L(u,v,w)^{-1}
IntegerMatrix upper_inverse(const TriParams &t);    // U(x,y,z)^{-1}

template <class T> using Entries3 = std::array<T, 9>;

/// L(u,v,w) T(a,b,c) L^{-1}, entry by entry, row-major.
template <class T>
constexpr Entries3<T> lower_mixed_entries(const T &a, const T &b, const T &c,
                                          const T &u, const T &v, const T &w) {
  const T s = u * w - v;
  const T bu_c = b * u + c;
  const T tail = b * v + c * w;
  return {T(-1) - a * u + b * s, a - b * w, b,
          -a * u * u + bu_c * s, T(-1) + a * u - w * bu_c, bu_c,
          -a * u * v + u * w - v + s * (tail + T(1)), a * v - w * (tail + T(2)),
          T(1) + tail};
}

/// L(u,v,w) U(a,b,c) L^{-1}, entry by entry, row-major.
template <class T>
constexpr Entries3<T> lower_unipotent_entries(const T &a, const T &b,
                                              const T &c, const T &u,
                                              const T &v, const T &w) {
  const T s = u * w - v;
  const T bu_c = b * u + c;
  const T tail = b * v + c * w;
  return {T(1) - a * u + b * s, a - b * w, b,
          -a * u * u + bu_c * s, T(1) + a * u - w * bu_c, bu_c,
          -a * u * v + s * tail, a * v - w * tail,
          T(1) + tail};
}

/// U(x,y,z) T(a,b,c) U(x,y,z)^{-1} = T(a, b + c x - a z + 2 y, c + 2 z).
TriParams conj_upper_closed(const TriParams &t, const Integer &x,
                            const Integer &y, const Integer &z);

IntegerMatrix conj_lower_closed(const TriParams &t, const LowerParams &l);
IntegerMatrix conj_lower_unipotent(const TriParams &t, const LowerParams &l);

struct Range {
  std::int64_t lo;
  std::int64_t hi;
  std::int64_t size() const { return hi >= lo ? hi - lo + 1 : 0; }
};

/// Symmetric box [-M, M] for each of u, v, w, M = ceil(K H / (1 + |a| + |c|)).
Range u_box(std::int64_t a, std::int64_t c, std::int64_t height, std::int64_t k);

/// Admissible b: [-H, H] when w = 0, else |b| <= floor((|a| + H) / |w|)
/// intersected with [-H, H]. Follows from B12 = a - b w.
Range b_range(std::int64_t a, std::int64_t c, std::int64_t w, std::int64_t height);

struct VerifyOptions {
  /// Exhaustive check over all six parameters in [-box, box].
  std::int64_t box = 3;
  /// Additional random sextuples drawn uniformly from [-range, range].
  std::uint64_t trials = 100'000;
  std::int64_t range = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct VerifyReport {
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  /// Largest absolute entry seen in a conjugated matrix.
  Integer max_entry = 0;
};

/// Compares the three closed forms against direct matrix products, and
/// checks L L^{-1} = U U^{-1} = I. Throws InvalidArgument when range or
/// box exceeds 10^4.
VerifyReport verify_closed_forms(const VerifyOptions &opts = {});

} // namespace splitcount::conj3
