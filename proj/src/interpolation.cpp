#include "capelli/interpolation.hpp"

#include "capelli/error.hpp"
#include "capelli/jordan.hpp"
#include "capelli/linalg.hpp"

namespace capelli {

namespace {

// Evaluation point of a partition in the given ring: Frobenius
// coordinates for SuperA, the zero-padded n-tuple for QType.
RationalVector evaluation_point(const RingSpec& spec, const Partition& mu) {
  if (spec.kind == RingKind::SuperA)
    return frobenius_coords(mu, spec.m, spec.n, spec.theta).as_vector();
  RationalVector point(static_cast<std::size_t>(spec.n), Rational(0));
  for (std::size_t i = 1; i <= mu.length(); ++i)
    point[i - 1] = Rational(mu.part(i));
  return point;
}

std::vector<Partition> constraint_partitions(const RingSpec& spec, long d) {
  std::vector<Partition> all;
  for (long k = 0; k <= d; ++k) {
    auto level = spec.kind == RingKind::SuperA
                     ? enumerate_hook(spec.m, spec.n, k)
                     : enumerate_strict(spec.n, k);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

InterpolationResult solve_characterization(const RingSpec& spec,
                                           const Partition& lambda,
                                           const Rational& normalization) {
  const long d = lambda.weight();
  const std::vector<MPoly> basis = spanning_set(spec, d);
  const std::vector<Partition> points = constraint_partitions(spec, d);

  LinearSystem sys;
  for (const Partition& mu : points) {
    const RationalVector pt = evaluation_point(spec, mu);
    RationalVector row;
    row.reserve(basis.size());
    for (const MPoly& g : basis) row.push_back(poly_eval(g, pt));
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(mu == lambda ? normalization : Rational(0));
  }
  const auto solution = solve_exact(sys);
  if (!solution)
    throw Error("NO_SOLUTION",
                "interpolation constraints are inconsistent for lambda=(" +
                    lambda.str() + ")");
  MPoly p(spec.variables());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if ((*solution)[i] != 0) p += basis[i] * (*solution)[i];

  // Re-verify every characterizing property on the assembled polynomial.
  bool ok = p.total_degree() <= d && is_member(spec, p);
  for (const Partition& mu : points) {
    if (!ok) break;
    const Rational value = poly_eval(p, evaluation_point(spec, mu));
    ok = (value == (mu == lambda ? normalization : Rational(0)));
  }
  return InterpolationResult{std::move(p), spec, lambda, ok};
}

} // namespace

InterpolationResult super_jack_shifted(long m, long n, const Rational& theta,
                                       const Partition& lambda) {
  if (admissibility_set_contains(m, n, theta))
    throw Error("INADMISSIBLE_THETA", "theta = " + to_string(theta) +
                                          " lies in S(" + std::to_string(m) +
                                          "," + std::to_string(n) + ")");
  if (!in_hook(lambda, m, n))
    throw Error("NOT_IN_HOOK", "lambda=(" + lambda.str() + ") is not in H(" +
                                   std::to_string(m) + "," +
                                   std::to_string(n) + ")");
  return solve_characterization(super_a(m, n, theta), lambda,
                                hook_product_theta(lambda, theta));
}

InterpolationResult factorial_schur_q(long n, const Partition& lambda) {
  if (!lambda.is_strict())
    throw Error("NOT_STRICT",
                "lambda=(" + lambda.str() + ") has repeated parts");
  if (lambda.length() > static_cast<std::size_t>(n))
    throw Error("LENGTH_EXCEEDED", "lambda=(" + lambda.str() +
                                       ") has more than " + std::to_string(n) +
                                       " parts");
  return solve_characterization(q_type(n), lambda, hook_product_q(lambda));
}

bool knop_sahi_duality_check(long k, const Rational& theta,
                             const Partition& lambda) {
  const Partition lt = transpose(lambda);
  const Rational theta_inv = Rational(1) / theta;
  const InterpolationResult lhs = super_jack_shifted(0, k, theta, lambda);
  const InterpolationResult rhs = super_jack_shifted(k, 0, theta_inv, lt);
  const Rational ratio =
      hook_product_theta(lambda, theta) / hook_product_theta(lt, theta_inv);
  // Both sides are polynomials in k variables; carry the terms of the
  // (k,0) side over to the y-variable list of the (0,k) side.
  MPoly scaled(lhs.poly.vars());
  for (const auto& [e, c] : rhs.poly.terms()) scaled.add_term(e, ratio * c);
  return lhs.poly == scaled;
}

} // namespace capelli
