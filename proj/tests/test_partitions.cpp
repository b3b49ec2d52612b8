#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "capelli/error.hpp"
#include "capelli/partitions.hpp"

using namespace capelli;

namespace {

std::vector<Partition> all_partitions_up_to(long dmax) {
  std::vector<Partition> out;
  for (long d = 0; d <= dmax; ++d) {
    auto level = enumerate_hook(d, 0, d); // at most d rows = all of them
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Classical hook length of the box (i, j) in lambda.
long classical_hook(const Partition& p, std::size_t i, long j) {
  const Partition t = transpose(p);
  return p.part(i) - j + t.part(static_cast<std::size_t>(j)) -
         static_cast<long>(i) + 1;
}

} // namespace

TEST_CASE("transpose examples and involution") {
  CHECK(transpose(Partition{}) == Partition{});
  CHECK(transpose(Partition({2, 1})) == Partition({2, 1}));
  CHECK(transpose(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
  for (const auto& p : all_partitions_up_to(8)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, -1}), Error);
  CHECK(Partition({3, 0, 0}) == Partition({3})); // trailing zeros dropped
}

TEST_CASE("enumerate_hook examples") {
  CHECK(enumerate_hook(1, 1, 2) ==
        std::vector<Partition>{Partition({2}), Partition({1, 1})});
  CHECK(enumerate_hook(2, 0, 3) ==
        std::vector<Partition>{Partition({3}), Partition({2, 1})});
  CHECK(enumerate_hook(1, 0, 0) == std::vector<Partition>{Partition{}});
}

TEST_CASE("enumerate_hook monotonicity and completeness") {
  for (long d = 0; d <= 6; ++d) {
    for (long m = 0; m <= 3; ++m)
      for (long n = 0; n <= 3; ++n) {
        const auto base = enumerate_hook(m, n, d).size();
        CHECK(enumerate_hook(m + 1, n, d).size() >= base);
        CHECK(enumerate_hook(m, n + 1, d).size() >= base);
      }
    // H_d(d, 0) is all partitions of d.
    const auto all = enumerate_hook(d, 0, d);
    std::set<Partition> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
    for (const auto& p : all) CHECK(p.weight() == d);
  }
  CHECK(enumerate_hook(5, 0, 5).size() == 7); // p(5) = 7
  CHECK(enumerate_hook(6, 0, 6).size() == 11);
}

TEST_CASE("enumerate_strict examples") {
  CHECK(enumerate_strict(3, 3) ==
        std::vector<Partition>{Partition({3}), Partition({2, 1})});
  CHECK(enumerate_strict(1, 3) == std::vector<Partition>{Partition({3})});
  CHECK(enumerate_strict(2, 0) == std::vector<Partition>{Partition{}});
  for (const auto& p : enumerate_strict(4, 8)) CHECK(p.is_strict());
}

TEST_CASE("descending lexicographic enumeration order") {
  for (const auto& list : {enumerate_hook(2, 1, 5), enumerate_strict(3, 7)})
    for (std::size_t i = 1; i < list.size(); ++i)
      CHECK(desc_lex_less(list[i - 1], list[i]));
}

TEST_CASE("hook_product_theta examples") {
  const Rational theta(5, 7);
  CHECK(hook_product_theta(Partition{}, theta) == 1);
  CHECK(hook_product_theta(Partition({1}), theta) == 1);
  CHECK(hook_product_theta(Partition({2}), theta) == 2);
  CHECK(hook_product_theta(Partition({2}), Rational(-3)) == 2);
  // theta = 1 and lambda a column: product vanishes only at negative
  // integer theta values; (1,1) at theta = -1 gives the error path.
  CHECK_THROWS_AS(hook_product_theta(Partition({1, 1}), Rational(-1)), Error);
}

TEST_CASE("hook_product_theta at theta=1 is the classical hook product") {
  for (const auto& p : all_partitions_up_to(5)) {
    Rational expected(1);
    for (std::size_t i = 1; i <= p.length(); ++i)
      for (long j = 1; j <= p.part(i); ++j) expected *= classical_hook(p, i, j);
    CHECK(hook_product_theta(p, Rational(1)) == expected);
  }
}

TEST_CASE("hook_product_q examples") {
  CHECK(hook_product_q(Partition({1})) == 1);
  CHECK(hook_product_q(Partition({2})) == 2);
  CHECK(hook_product_q(Partition({2, 1})) == 6);
  CHECK(hook_product_q(Partition({3, 1})) == Rational(12)); // 3!*1!*(4/2)
  CHECK_THROWS_AS(hook_product_q(Partition({2, 2})), Error);
}

TEST_CASE("frobenius_coords examples") {
  {
    const auto fc = frobenius_coords(Partition({2, 1}), 2, 1, frac(3, 2));
    CHECK(fc.x == RationalVector{frac(9, 4), frac(-1, 4)});
    CHECK(fc.y == RationalVector{Rational(1)});
  }
  for (const Rational& theta : {Rational(1), frac(3, 2), frac(-2, 5)}) {
    const auto empty = frobenius_coords(Partition{}, 1, 1, theta);
    CHECK(empty.x == RationalVector{frac(-1, 2)});
    CHECK(empty.y == RationalVector{frac(1, 2)});
    const auto one = frobenius_coords(Partition({1}), 1, 1, theta);
    CHECK(one.x == RationalVector{frac(1, 2)});
    CHECK(one.y == RationalVector{frac(1, 2)});
  }
  CHECK_THROWS_AS(frobenius_coords(Partition({1, 1}), 1, 0, Rational(1)), Error);
  CHECK_THROWS_AS(frobenius_coords(Partition({1}), 1, 1, Rational(0)), Error);
}

TEST_CASE("frobenius_coords is injective on small hooks") {
  struct Grid {
    long m, n;
    Rational theta;
  };
  for (const Grid& g : {Grid{1, 1, Rational(1)}, Grid{1, 1, frac(3, 2)},
                        Grid{2, 1, frac(3, 2)}, Grid{1, 2, frac(1, 2)},
                        Grid{2, 1, frac(5, 3)}}) {
    std::vector<Partition> all;
    for (long d = 0; d <= 6; ++d) {
      auto level = enumerate_hook(g.m, g.n, d);
      all.insert(all.end(), level.begin(), level.end());
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        const auto a = frobenius_coords(all[i], g.m, g.n, g.theta).as_vector();
        const auto b = frobenius_coords(all[j], g.m, g.n, g.theta).as_vector();
        CHECK(a != b);
      }
  }
}
