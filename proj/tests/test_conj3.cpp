#include "doctest.h"

#include <random>

#include "splitcount/conj3.hpp"
#include "splitcount/errors.hpp"
#include "splitcount/linalg.hpp"
#include "support.hpp"

using namespace splitcount;
using namespace splitcount::conj3;
using testsupport::naive_mul;

TEST_CASE("upper conjugation closed form") {
  CHECK(conj_upper_closed({1, 0, 0}, 0, 0, 1) == TriParams{1, -1, 2});
  CHECK(conj_upper_closed({4, -2, 7}, 0, 0, 0) == TriParams{4, -2, 7});

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int t = 0; t < 500; ++t) {
    TriParams p{d(rng), d(rng), d(rng)};
    TriParams u{d(rng), d(rng), d(rng)};
    IntegerMatrix direct = naive_mul(naive_mul(unipotent_matrix(u), mixed_matrix(p)),
                                     upper_inverse(u));
    TriParams closed = conj_upper_closed(p, u.a, u.b, u.c);
    CHECK(direct == mixed_matrix(closed));
    CHECK(closed.a == p.a);
  }
}

TEST_CASE("lower conjugation, mixed case") {
  CHECK(conj_lower_closed({3, -1, 2}, {0, 0, 0}) == mixed_matrix({3, -1, 2}));
  IntegerMatrix b = conj_lower_closed({1, 1, 1}, {1, 0, 1});
  CHECK(b(0, 0) == -1);
  CHECK(b(0, 1) == 0);
  CHECK(b(1, 2) == 2);

  for (long a = -3; a <= 3; ++a)
    for (long u = -3; u <= 3; ++u)
      for (long w = -3; w <= 3; ++w) {
        TriParams t{a, 2 - a, a + w};
        LowerParams l{u, a - w, w};
        IntegerMatrix direct =
            naive_mul(naive_mul(lower_matrix(l), mixed_matrix(t)), lower_inverse(l));
        CHECK(conj_lower_closed(t, l) == direct);
        CHECK(char_poly(direct) == SplitPolySpec(1, 2).poly());
      }
}

TEST_CASE("lower conjugation, unipotent case") {
  CHECK(conj_lower_unipotent({3, -1, 2}, {0, 0, 0}) == unipotent_matrix({3, -1, 2}));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int t = 0; t < 500; ++t) {
    TriParams p{d(rng), d(rng), d(rng)};
    LowerParams l{d(rng), d(rng), d(rng)};
    IntegerMatrix m = conj_lower_unipotent(p, l);
    CHECK(m(0, 0) + m(1, 1) + m(2, 2) == 3);
    CHECK(m == naive_mul(naive_mul(lower_matrix(l), unipotent_matrix(p)), lower_inverse(l)));
    CHECK(char_poly(m) == SplitPolySpec(3, 0).poly());
  }
}

TEST_CASE("height boxes") {
  CHECK(u_box(0, 0, 7, 1).hi == 7);
  CHECK(u_box(0, 0, 7, 1).lo == -7);
  const long H = 5;
  CHECK(u_box(H, H, H, 1).hi == 1);
  CHECK(u_box(1, 2, 10, 4).hi == 10);
  CHECK(u_box(1, 1, 10, 4).hi == 14);
  CHECK_THROWS_AS(u_box(0, 0, 0, 1), Error);
  CHECK_THROWS_AS(u_box(0, 0, 1, 0), Error);

  CHECK(b_range(3, 1, 0, H).hi == H);
  CHECK(b_range(0, 0, 2 * H, H).hi == 0);
  CHECK(b_range(H, 0, 1, H).hi == H);
  CHECK(b_range(1, 0, -3, H).hi == 2);
  CHECK(b_range(1, 0, -3, H).lo == -2);
  CHECK(Range{1, 0}.size() == 0);
}

TEST_CASE("closed form verification") {
  VerifyOptions opts;
  opts.box = 1;
  opts.trials = 5000;
  opts.range = 50;
  VerifyReport r = verify_closed_forms(opts);
  CHECK(r.mismatches == 0);
  CHECK(r.checks == 5 * (729 + 5000));
  CHECK(r.max_entry > 0);

  opts.threads = 4;
  VerifyReport r4 = verify_closed_forms(opts);
  CHECK(r4.checks == r.checks);
  CHECK(r4.max_entry == r.max_entry);
  opts.range = 20000;
  CHECK_THROWS_AS(verify_closed_forms(opts), Error);
}
