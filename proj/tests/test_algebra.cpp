#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "capelli/bernoulli.hpp"
#include "capelli/error.hpp"
#include "capelli/linalg.hpp"
#include "capelli/mpoly.hpp"

using namespace capelli;

namespace {

const std::vector<std::string> xy{"x", "y"};

MPoly X() { return MPoly::variable(xy, 0); }
MPoly Y() { return MPoly::variable(xy, 1); }

Rational rnd_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  return frac(num(rng), den(rng));
}

} // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(rational_from_string("3/6")) == "1/2");
  CHECK(to_string(rational_from_string("-4/2")) == "-2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(rational_pow(frac(2, 3), 3) == frac(8, 27));
  CHECK(rational_pow(Rational(2), -2) == frac(1, 4));
  CHECK(factorial(4) == Rational(24));
  CHECK(binomial(5, 2) == 10);
}

TEST_CASE("bernoulli polynomials") {
  const std::vector<std::string> zv{"z"};
  const MPoly z = MPoly::variable(zv, 0);
  CHECK(bernoulli_poly(0) == MPoly::constant(zv, 1));
  CHECK(bernoulli_poly(1) == z - MPoly::constant(zv, frac(1, 2)));
  CHECK(bernoulli_poly(2) ==
        z.pow(2) - z + MPoly::constant(zv, frac(1, 6)));
}

TEST_CASE("bernoulli difference identity B_t(z+1) - B_t(z) = t z^(t-1)") {
  const std::vector<std::string> zv{"z"};
  const MPoly z = MPoly::variable(zv, 0);
  for (long t = 1; t <= 6; ++t) {
    const MPoly bt = bernoulli_poly(t);
    const AffineMap shift(zv, zv, {{Rational(1)}}, {Rational(1)});
    const MPoly diff = poly_compose_affine(bt, shift) - bt;
    CHECK(diff == z.pow(t - 1) * Rational(t));
  }
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(X() + Y(), {frac(1, 2), frac(1, 2)}) == 1);
  const std::vector<std::string> xv{"x"};
  const MPoly x = MPoly::variable(xv, 0);
  CHECK(poly_eval(x.pow(2) - x, {Rational(2)}) == 2);
  CHECK(poly_eval(MPoly::constant(xv, 1), {frac(17, 3)}) == 1);
  CHECK_THROWS_AS(poly_eval(x, {}), Error);
}

TEST_CASE("poly_compose_affine basics") {
  const std::vector<std::string> xv{"x"};
  const MPoly x = MPoly::variable(xv, 0);
  CHECK(poly_compose_affine(x, AffineMap::identity(xv)) == x);

  // (a,b) |-> (a+1, b-1) turns x1+x2 into a+b.
  const std::vector<std::string> x12{"x1", "x2"};
  const std::vector<std::string> ab{"a", "b"};
  const MPoly s = MPoly::variable(x12, 0) + MPoly::variable(x12, 1);
  AffineMap map(ab, x12,
                {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                {Rational(1), Rational(-1)});
  CHECK(poly_compose_affine(s, map) ==
        MPoly::variable(ab, 0) + MPoly::variable(ab, 1));
}

TEST_CASE("affine round trip on random polynomials") {
  std::mt19937 rng(20240817);
  const std::vector<std::string> vars{"u", "v", "w"};
  for (int trial = 0; trial < 20; ++trial) {
    // Random invertible map: start from a unit upper-triangular matrix and
    // randomize; retry until invertible.
    AffineMap map = AffineMap::identity(vars);
    while (true) {
      std::vector<RationalVector> mat(3, RationalVector(3));
      for (auto& row : mat)
        for (auto& entry : row) entry = rnd_rational(rng);
      RationalVector off{rnd_rational(rng), rnd_rational(rng), rnd_rational(rng)};
      try {
        map = AffineMap(vars, vars, mat, off);
        map.inverse();
        break;
      } catch (const Error&) {
        continue;
      }
    }
    MPoly p(vars);
    std::uniform_int_distribution<int> deg(0, 2);
    for (int term = 0; term < 4; ++term) {
      Exponents e{deg(rng), deg(rng), deg(rng)};
      p.add_term(e, rnd_rational(rng));
    }
    const MPoly round = poly_compose_affine(poly_compose_affine(p, map),
                                            map.inverse());
    CHECK(round == p);
    // Composition with the inverse is the identity map.
    const AffineMap id = map.compose(map.inverse());
    RationalVector pt{rnd_rational(rng), rnd_rational(rng), rnd_rational(rng)};
    CHECK(id.apply(pt) == pt);
  }
}

TEST_CASE("solve_exact examples") {
  {
    LinearSystem sys{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                     {Rational(3), Rational(4)}};
    auto x = solve_exact(sys);
    REQUIRE(x.has_value());
    CHECK(*x == RationalVector{Rational(3), Rational(4)});
  }
  {
    // Underdetermined: free variable zeroed.
    LinearSystem sys{{{Rational(1), Rational(1)}}, {Rational(2)}};
    auto x = solve_exact(sys);
    REQUIRE(x.has_value());
    CHECK(*x == RationalVector{Rational(2), Rational(0)});
  }
  {
    LinearSystem sys{{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
                     {Rational(2), Rational(5)}};
    CHECK(!solve_exact(sys).has_value());
  }
}

TEST_CASE("solve_exact substitution property") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    LinearSystem sys;
    for (int i = 0; i < rows; ++i) {
      RationalVector row;
      for (int j = 0; j < cols; ++j) row.push_back(rnd_rational(rng));
      sys.matrix.push_back(row);
      sys.rhs.push_back(rnd_rational(rng));
    }
    const auto x = solve_exact(sys);
    if (!x) continue;
    for (int i = 0; i < rows; ++i) {
      Rational acc(0);
      for (int j = 0; j < cols; ++j) acc += sys.matrix[i][j] * (*x)[j];
      CHECK(acc == sys.rhs[i]);
    }
  }
}

TEST_CASE("rank_and_membership") {
  const MPoly x = X(), y = Y();
  {
    auto r = rank_and_membership({x}, x * Rational(2));
    CHECK(r.in_span);
    CHECK(r.rank == 1);
  }
  {
    auto r = rank_and_membership({x}, y);
    CHECK(!r.in_span);
    CHECK(r.rank == 1);
  }
  {
    auto r = rank_and_membership({x + y, x - y}, x);
    CHECK(r.in_span);
    CHECK(r.rank == 2);
  }
}

TEST_CASE("mpoly invariants") {
  MPoly p(xy);
  p.add_term({1, 0}, Rational(1));
  p.add_term({1, 0}, Rational(-1));
  CHECK(p.is_zero()); // cancelled terms are not stored
  CHECK(p.total_degree() == -1);
  CHECK((X() * Y()).total_degree() == 2);
  CHECK_THROWS_AS(X() + MPoly::variable({"z"}, 0), Error);

  // Canonical graded-lex serialization order.
  const MPoly q = Y() + X() + X() * X();
  std::vector<Exponents> order;
  for (const auto& [e, c] : q.terms()) order.push_back(e);
  CHECK(order == std::vector<Exponents>{{0, 1}, {1, 0}, {2, 0}});
}
