#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capelli/error.hpp"
#include "capelli/interpolation.hpp"
#include "capelli/linalg.hpp"
#include "oracles.hpp"

using namespace capelli;

TEST_CASE("super_jack_shifted small examples") {
  {
    // (1,1), lambda = (1): vanishes at (-1/2, 1/2), equals 1 at (1/2, 1/2).
    for (const Rational& theta : {Rational(1), frac(3, 2), Rational(2)}) {
      const auto r = super_jack_shifted(1, 1, theta, Partition({1}));
      CHECK(r.verified);
      const auto vars = r.spec.variables();
      CHECK(r.poly == MPoly::variable(vars, 0) + MPoly::variable(vars, 1));
    }
  }
  {
    const auto r = super_jack_shifted(1, 1, frac(3, 2), Partition{});
    CHECK(r.verified);
    CHECK(r.poly == MPoly::constant(r.spec.variables(), 1));
  }
  {
    // (2,0), theta = 1, lambda = (1): normalized at p((1)), zero at p({}).
    const auto r = super_jack_shifted(2, 0, Rational(1), Partition({1}));
    CHECK(r.verified);
    const auto at = [&](const Partition& mu) {
      return poly_eval(r.poly,
                       frobenius_coords(mu, 2, 0, Rational(1)).as_vector());
    };
    CHECK(at(Partition({1})) == 1);
    CHECK(at(Partition{}) == 0);
    const auto oracle = oracles::brute_force_super_jack(2, 0, Rational(1),
                                                        Partition({1}));
    REQUIRE(oracle.has_value());
    CHECK(r.poly == *oracle);
  }
}

TEST_CASE("super_jack_shifted error paths") {
  CHECK_THROWS_AS(super_jack_shifted(1, 1, Rational(-1), Partition({1})), Error);
  CHECK_THROWS_AS(super_jack_shifted(1, 1, Rational(0), Partition({1})), Error);
  CHECK_THROWS_AS(super_jack_shifted(1, 0, Rational(1), Partition({1, 1})), Error);
}

TEST_CASE("factorial_schur_q small examples") {
  {
    const auto r = factorial_schur_q(2, Partition({1}));
    CHECK(r.verified);
    const auto vars = r.spec.variables();
    CHECK(r.poly == MPoly::variable(vars, 0) + MPoly::variable(vars, 1));
  }
  {
    const auto r = factorial_schur_q(1, Partition({2}));
    const auto vars = r.spec.variables();
    const MPoly x = MPoly::variable(vars, 0);
    CHECK(r.verified);
    CHECK(r.poly == x.pow(2) - x);
  }
  {
    const auto r = factorial_schur_q(2, Partition({2}));
    const auto vars = r.spec.variables();
    const MPoly p1 = MPoly::variable(vars, 0) + MPoly::variable(vars, 1);
    CHECK(r.verified);
    CHECK(r.poly == p1.pow(2) - p1);
  }
  CHECK_THROWS_AS(factorial_schur_q(2, Partition({2, 2})), Error);
  CHECK_THROWS_AS(factorial_schur_q(1, Partition({2, 1})), Error);
}

TEST_CASE("evaluation table: characterizing values only") {
  struct Grid {
    long m, n;
    Rational theta;
  };
  for (const Grid& g : {Grid{1, 1, frac(3, 2)}, Grid{2, 1, frac(3, 2)},
                        Grid{1, 2, frac(1, 2)}}) {
    std::vector<Partition> all;
    for (long d = 0; d <= 4; ++d) {
      auto level = enumerate_hook(g.m, g.n, d);
      all.insert(all.end(), level.begin(), level.end());
    }
    for (const auto& lambda : all) {
      const auto r = super_jack_shifted(g.m, g.n, g.theta, lambda);
      CHECK(r.verified);
      CHECK(r.poly.total_degree() <= lambda.weight());
      CHECK(is_member(r.spec, r.poly));
      for (const auto& mu : all) {
        if (mu.weight() > lambda.weight()) continue;
        const Rational value = poly_eval(
            r.poly, frobenius_coords(mu, g.m, g.n, g.theta).as_vector());
        CHECK(value == (mu == lambda
                            ? hook_product_theta(lambda, g.theta)
                            : Rational(0)));
      }
    }
  }
}

TEST_CASE("agreement with the brute-force monomial oracle") {
  struct Grid {
    long m, n;
    Rational theta;
  };
  for (const Grid& g : {Grid{1, 1, Rational(1)}, Grid{1, 1, frac(3, 2)},
                        Grid{2, 1, frac(3, 2)}, Grid{1, 2, frac(1, 2)}}) {
    for (long d = 0; d <= 3; ++d) {
      for (const auto& lambda : enumerate_hook(g.m, g.n, d)) {
        const auto r = super_jack_shifted(g.m, g.n, g.theta, lambda);
        const auto oracle =
            oracles::brute_force_super_jack(g.m, g.n, g.theta, lambda);
        REQUIRE(oracle.has_value());
        CHECK(r.poly == *oracle);
      }
    }
  }
  for (long n = 1; n <= 3; ++n) {
    for (long d = 0; d <= 3; ++d) {
      for (const auto& lambda : enumerate_strict(n, d)) {
        const auto r = factorial_schur_q(n, lambda);
        const auto oracle = oracles::brute_force_schur_q(n, lambda);
        REQUIRE(oracle.has_value());
        CHECK(r.poly == *oracle);
      }
    }
  }
}

TEST_CASE("uniqueness under reversed constraint order") {
  // Rebuild the linear system with rows reversed; the assembled
  // polynomial must be identical even if the coordinate vector differs.
  auto reversed_solve = [](const RingSpec& spec, const Partition& lambda,
                           const Rational& normalization) {
    const long d = lambda.weight();
    const auto basis = spanning_set(spec, d);
    std::vector<Partition> points;
    for (long k = 0; k <= d; ++k) {
      auto level = spec.kind == RingKind::SuperA
                       ? enumerate_hook(spec.m, spec.n, k)
                       : enumerate_strict(spec.n, k);
      points.insert(points.end(), level.begin(), level.end());
    }
    std::reverse(points.begin(), points.end());
    LinearSystem sys;
    for (const auto& mu : points) {
      RationalVector pt;
      if (spec.kind == RingKind::SuperA) {
        pt = frobenius_coords(mu, spec.m, spec.n, spec.theta).as_vector();
      } else {
        pt.assign(static_cast<std::size_t>(spec.n), Rational(0));
        for (std::size_t i = 1; i <= mu.length(); ++i)
          pt[i - 1] = Rational(mu.part(i));
      }
      RationalVector row;
      for (const auto& g : basis) row.push_back(poly_eval(g, pt));
      sys.matrix.push_back(std::move(row));
      sys.rhs.push_back(mu == lambda ? normalization : Rational(0));
    }
    const auto sol = solve_exact(sys);
    REQUIRE(sol.has_value());
    MPoly p(spec.variables());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((*sol)[i] != 0) p += basis[i] * (*sol)[i];
    return p;
  };

  struct Grid {
    long m, n;
  };
  for (const Grid& g : {Grid{1, 1}, Grid{2, 1}}) {
    for (const Rational& theta : {Rational(1), frac(1, 2), frac(3, 2)}) {
      for (long d = 0; d <= 4; ++d)
        for (const auto& lambda : enumerate_hook(g.m, g.n, d)) {
          const auto r = super_jack_shifted(g.m, g.n, theta, lambda);
          CHECK(reversed_solve(r.spec, lambda,
                               hook_product_theta(lambda, theta)) == r.poly);
        }
    }
  }
  for (long n = 1; n <= 3; ++n)
    for (long d = 0; d <= 4; ++d)
      for (const auto& lambda : enumerate_strict(n, d)) {
        const auto r = factorial_schur_q(n, lambda);
        CHECK(reversed_solve(r.spec, lambda, hook_product_q(lambda)) == r.poly);
      }
}

TEST_CASE("knop_sahi_duality_check") {
  CHECK(knop_sahi_duality_check(1, Rational(2), Partition({1})));
  CHECK(knop_sahi_duality_check(2, frac(3, 2), Partition({2, 1})));
  CHECK(knop_sahi_duality_check(2, frac(3, 2), Partition{}));
  for (long k = 1; k <= 2; ++k)
    for (const Rational& theta : {frac(3, 2), Rational(2)})
      for (long d = 0; d <= 4; ++d)
        for (const auto& lambda : enumerate_hook(0, k, d))
          CHECK(knop_sahi_duality_check(k, theta, lambda));
}
