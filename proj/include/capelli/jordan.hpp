#ifndef CAPELLI_JORDAN_HPP
#define CAPELLI_JORDAN_HPP

#include <map>
#include <string>
#include <vector>

#include "capelli/mpoly.hpp"
#include "capelli/partitions.hpp"
#include "capelli/rings.hpp"

namespace capelli {

/// The seven families of unital simple Jordan superalgebras handled here:
///   I   gl(m,n)_+        m,n >= 1   type A, (r+, r-) = (m, n), theta = 1
///   II  osp(n,2m)_+      m,n >= 1   type A, (m, n), theta = 1/2
///   III (m,2n)_+         m,n >= 1   type A, (2, 0), theta = (m-1)/2 - n
///   IV  D_t              t != 0,-1  type A, (1, 1), theta = -1/t
///   V   F (exceptional)             type A, (2, 1), theta = 3/2
///   VI  p(n)_+           n >= 2     type Q, rank n
///   VII q(n)_+           n >= 2     type Q, rank n
enum class CaseTag { I, II, III, IV, V, VI, VII };

std::string case_name(CaseTag tag);
CaseTag case_from_name(const std::string& name);

class JordanCase {
public:
  static JordanCase case_I(long m, long n);
  static JordanCase case_II(long m, long n);
  static JordanCase case_III(long m, long n);
  static JordanCase case_IV(const Rational& t);
  static JordanCase case_V();
  static JordanCase case_VI(long n);
  static JordanCase case_VII(long n);

  CaseTag tag() const { return tag_; }
  long m() const { return m_; }
  long n() const { return n_; }
  const Rational& t() const { return t_; }

  bool is_type_a() const;
  /// Ranks of the restricted root system: (r_plus, r_minus) for type A,
  /// rank() for type Q.
  long r_plus() const;
  long r_minus() const;
  long rank() const;
  /// Deformation parameter theta_J = -kappa (type A only).
  Rational theta() const;
  /// Evaluation-space dimension: r_plus + r_minus, or rank.
  long n_j() const;
  /// The invariant ring Lambda_J this case's polynomials live in.
  RingSpec ring() const;

  /// Human-readable parameter summary, e.g. "I(m=1,n=2)".
  std::string describe() const;

  /// When set, the multiplicity-freeness gate on eigenvalue computations
  /// is bypassed so the failure boundary can be explored.  Never set by
  /// default.
  bool diagnostic_override() const { return diagnostic_override_; }
  void set_diagnostic_override(bool v) { diagnostic_override_ = v; }

  friend bool operator==(const JordanCase& a, const JordanCase& b) {
    return a.tag_ == b.tag_ && a.m_ == b.m_ && a.n_ == b.n_ && a.t_ == b.t_;
  }

private:
  JordanCase(CaseTag tag, long m, long n, Rational t);

  CaseTag tag_;
  long m_, n_;
  Rational t_;
  bool diagnostic_override_ = false;
};

/// Weight of the Cartan subalgebra, stored as exact coefficients over a
/// fixed named basis.  The two-factor cases I and VII store the pair
/// (-mu, mu) over a doubled basis (unprimed first copy, primed second).
struct Weight {
  std::vector<std::string> basis;
  RationalVector coeffs;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.basis == b.basis && a.coeffs == b.coeffs;
  }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.basis != b.basis) return a.basis < b.basis;
    return a.coeffs < b.coeffs;
  }
  std::string str() const;
};

struct GradedDim {
  long even = 0;
  long odd = 0;
};

/// Restricted root system data: graded dimensions of the root spaces per
/// class, with mult(alpha) = -(1/2) sdim.  For type A the multiplicities
/// are (kappa, 1, kappa^{-1}) with kappa = -theta_J; for type Q every
/// class has graded dimension (2|2).
struct RootDatum {
  std::string sigma_type; // "A(r-1,s-1)" or "Q(r)"
  // Keys: "eps-eps", "eps-delta", "delta-delta" (only classes present).
  std::map<std::string, GradedDim> class_dims;
  Rational kappa;
};

/// Membership in the inadmissible set S(m,n) of deformation parameters:
///   n = 0: { -a/b : a >= 1, 1 <= b <= m-1 }
///   m = 0: { -a/b : 0 <= a <= n, b >= 1 }
///   else : all rationals <= 0.
bool admissibility_set_contains(long m, long n, const Rational& theta);

/// Type Q: always true.  Type A: theta_J not in S(r_plus, r_minus).
bool is_multiplicity_free(const JordanCase& c);

/// Omega_d: the hook or strict partitions of weight d indexing the
/// degree-d decomposition.  NOT_MULTIPLICITY_FREE unless the case is
/// multiplicity-free (or its diagnostic override is set).
std::vector<Partition> omega(const JordanCase& c, long d);

/// All of Omega_0, ..., Omega_d in one list, weight-major order.
std::vector<Partition> omega_up_to(const JordanCase& c, long d);

/// The highest weight attached to a partition of the correct shape
/// (hook/strict for the case's ranks); NOT_IN_OMEGA otherwise.  The shape
/// check is independent of the multiplicity-freeness gate so the weight
/// formulas can be examined on the failure boundary.
Weight highest_weight(const JordanCase& c, const Partition& lambda);

/// Coordinate names of the affine weight-space slice, e.g.
/// {"a1","a2","b1"} or {"a","b","c"}.
std::vector<std::string> a_omega_vars(const JordanCase& c);

/// Reads the slice coordinates (a, b[, c]) off a weight; validates the
/// tied coefficients (e.g. the two delta entries of case IV must agree).
RationalVector a_omega_coordinates(const JordanCase& c, const Weight& w);

/// The affine map tau_J from the slice coordinates to Q^{n_J}, with the
/// case's ring variables as codomain names.
AffineMap tau(const JordanCase& c);

/// tau_J applied to the slice coordinates of the highest weight of
/// lambda.  For cases I, II, V this equals frobenius_coords(lambda) and
/// for VI, VII it equals lambda padded with zeros; for III and IV the
/// printed maps deviate from the Frobenius convention (see the diagnostic
/// verification suite).
RationalVector composite_coordinates(const JordanCase& c, const Partition& lambda);

RootDatum root_datum(const JordanCase& c);

/// E_d of the exceptional case: the weights
///   (d+2s-4) eps1 + (d-2r-s)(delta1+delta2) + d zeta
/// over q,r >= 0, s >= 2 with q + 2r + s = d, plus
///   d eps1 + d delta1 + d delta2 + d zeta,
/// deduplicated.  Coincides with the highest weights over H_d(2,1).
std::vector<Weight> case5_weights_E_d(long d);

struct DimensionIdentity {
  long lhs; // sum over E_d of even Kac-module dimensions
  long rhs; // closed form for dim S^d(V*)_even, V* of dimension (6|4)
};

/// Both sides of the degree-d even-dimension bookkeeping identity for the
/// exceptional case, using N_k = (2k+3)(k+2)(k+1)/6:
///   lhs = N_d + N_{d-1} + 8 * sum_{a=0}^{d-2} C(d-a+2, 4)
///   rhs = (d+1)(2d^2+4d+3)/3 + (d+3)(d+2)(d+1)d(d-1)/15.
DimensionIdentity case5_dimension_identity(long d);

/// The weights eta_1..eta_d of the degree-d decomposition for case IV:
///   eta_k = (d(3+t)/(1+t) - 2k) eps1 + (k - d(2+t)/(1+t))(delta1+delta2).
/// Matches highest_weight(IV, (k, 1^{d-k})).
std::vector<Weight> case4_eta_weights(const Rational& t, long d);

} // namespace capelli

#endif
