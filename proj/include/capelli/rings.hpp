#ifndef CAPELLI_RINGS_HPP
#define CAPELLI_RINGS_HPP

#include <string>
#include <vector>

#include "capelli/mpoly.hpp"
#include "capelli/rational.hpp"

namespace capelli {

enum class RingKind { SuperA, QType };

/// One of the two invariant polynomial rings.
///
/// SuperA is the ring of polynomials in x_1..x_m, y_1..y_n that are
/// separately symmetric in x and in y and satisfy the shift-matching
/// condition f(x + e_i/2, y - e_j/2) = f(x - e_i/2, y + e_j/2) on every
/// hyperplane x_i + theta*y_j = 0.
///
/// QType is the ring of symmetric polynomials f in x_1..x_n such that
/// f(t, -t, x_3, ..., x_n) is independent of t (vacuous for n = 1).
struct RingSpec {
  RingKind kind;
  long m = 0;
  long n = 0;
  Rational theta; // SuperA only; must be nonzero when n > 0

  std::vector<std::string> variables() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.kind == b.kind && a.m == b.m && a.n == b.n &&
           (a.kind == RingKind::QType || a.theta == b.theta);
  }
};

RingSpec super_a(long m, long n, const Rational& theta);
RingSpec q_type(long n);

/// Exact membership test for the ring.  Symmetry is checked as polynomial
/// equality under adjacent transpositions; the hyperplane condition as
/// exact divisibility of the shift difference by x_i + theta*y_j.
bool is_member(const RingSpec& spec, const MPoly& p);

/// The deformed power sum
///   h_t = sum_i B_t(x_i + 1/2) + (-theta)^(t-1) * sum_j B_t(y_j + 1/2),
/// an element of the SuperA ring for every t >= 1.
MPoly deformed_power_sum(const RingSpec& spec, long t);

/// p_r = sum_i x_i^r for odd r; EVEN_DEGREE otherwise.  Lies in the QType
/// ring.
MPoly odd_power_sum(const RingSpec& spec, long r);

/// Filtration-level spanning family:
///   SuperA: all products h_1^{m_1} ... h_d^{m_d} with sum j*m_j <= d;
///   QType:  all products p_1^{m_1} p_3^{m_2} ... with sum (2j-1)*m_j <= d
///           (for n = 1 the Gamma condition is vacuous, so the monomials
///           x^0..x^d are used instead).
/// Linear dependence among the products is tolerated; ranks are resolved
/// downstream.  Order is deterministic by exponent multi-index.
std::vector<MPoly> spanning_set(const RingSpec& spec, long d);

/// Exact rank of spanning_set(spec, d) as monomial-coefficient vectors.
long filtered_dimension(const RingSpec& spec, long d);

} // namespace capelli

#endif
