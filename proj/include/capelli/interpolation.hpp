#ifndef CAPELLI_INTERPOLATION_HPP
#define CAPELLI_INTERPOLATION_HPP

#include "capelli/mpoly.hpp"
#include "capelli/partitions.hpp"
#include "capelli/rings.hpp"

namespace capelli {

/// Result of an interpolation solve.  verified = true means the assembled
/// polynomial was re-checked against every characterizing property: ring
/// membership, the degree bound, all vanishing conditions, and the
/// normalization, all exactly.
struct InterpolationResult {
  MPoly poly;
  RingSpec spec;
  Partition lambda;
  bool verified = false;
};

/// The interpolation (shifted) super Jack polynomial SP_lambda(x, y):
/// the unique element of the SuperA ring of degree <= |lambda| with
///   SP_lambda(p(mu), q(mu)) = 0 for mu in H(m,n), |mu| <= |lambda|,
///   mu != lambda, and SP_lambda(p(lambda), q(lambda)) = H_theta(lambda),
/// where (p, q) are the (m,n,theta) Frobenius coordinates.
///
/// Solved exactly over the h_t-product spanning family and re-verified.
/// Errors: INADMISSIBLE_THETA when theta lies in S(m,n); NOT_IN_HOOK;
/// NO_SOLUTION on internal inconsistency (cannot occur for admissible
/// theta).
InterpolationResult super_jack_shifted(long m, long n, const Rational& theta,
                                       const Partition& lambda);

/// The factorial Schur Q-polynomial Q*_lambda(x): the unique element of
/// the QType ring of degree <= |lambda| vanishing at every strict mu with
/// |mu| <= |lambda|, mu != lambda (partitions identified with zero-padded
/// n-tuples), normalized by Q*_lambda(lambda) = H(lambda).
/// Errors: NOT_STRICT, LENGTH_EXCEEDED, NO_SOLUTION.
InterpolationResult factorial_schur_q(long n, const Partition& lambda);

/// Cross-check of the one-sided specializations: computes SP_lambda in
/// the (0,k) setting at theta and SP_lambda' in the (k,0) setting at
/// 1/theta, and tests the exact polynomial identity
///   SP_lambda(y, theta) =
///     (H_theta(lambda) / H_{1/theta}(lambda')) * SP_lambda'(y, 1/theta).
/// Requires lambda_1 <= k, theta outside S(0,k), 1/theta outside S(k,0).
bool knop_sahi_duality_check(long k, const Rational& theta,
                             const Partition& lambda);

} // namespace capelli

#endif
