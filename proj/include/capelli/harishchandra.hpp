#ifndef CAPELLI_HARISHCHANDRA_HPP
#define CAPELLI_HARISHCHANDRA_HPP

#include <string>
#include <vector>

#include "capelli/eigenvalues.hpp"
#include "capelli/jordan.hpp"
#include "capelli/mpoly.hpp"

namespace capelli {

/// Per-case generator family of the restricted centre image, expressed on
/// the a_Omega coordinates.
struct HCGeneratorSet {
  JordanCase jcase;
  std::vector<std::string> vars;
  std::vector<MPoly> generators;
  std::vector<std::string> labels;
};

/// The explicit generator families:
///   I:   f_k = sum_i (a_i + (m+1)/2 - n/2 - i)^k
///              + (-1)^(k-1) sum_j (b_j + (m+1)/2 + n/2 - j)^k
///   II:  f_k = sum_i (a_i - (m+1)/2 + n + i)^k + (-1)^(k-1) sum_j
///              [(b_j - (m+1)/2 - n + 2j-1)^k + (b_j - (m+1)/2 - n + 2j)^k]
///   III: f_1 = b,  f_2 = (a + (m+1)/2 - n - 1)^2
///   IV:  f_k = (a+1)^k + (-1)^(k-1) ((b-1)^k + b^k)
///   V:   f_k = (a+2)^{2k} - (b+2)^{2k} - (b+1)^{2k};  Q = c;  and
///        F_g = (a+2)((b+2)^2-(a+2)^2)((b+1)^2-(a+2)^2) g(a+2,(b+2)^2,(b+1)^2)
///        for g running over the monomials s^al (t1 t2)^be (t1+t2)^ga of
///        total degree <= max_g_degree, g symmetric in t1, t2
///   VI:  the odd power sums p_r = sum_i a_i^r, odd r <= max_k
///   VII: UNSUPPORTED_CASE (no explicit family; the surjectivity check
///        uses the ring's odd-power-sum spanning family directly).
///
/// Case IV note: the linear variant that replaces (a+1)^k by (a+1) is
/// available behind `printed_case_iv_variant`; the k-th power form is the
/// one consistent with the family's own change-of-coordinates display and
/// is the default.
HCGeneratorSet hc_generators(const JordanCase& c, long max_k,
                             long max_g_degree = 2,
                             bool printed_case_iv_variant = false);

/// All products of the generators with total degree <= d (the empty
/// product 1 included), deterministic order.
std::vector<MPoly> hc_degree_span(const HCGeneratorSet& gens, long d);

/// Bounded-degree surjectivity: every pullback tau_J^*(P_{J,mu}) with mu
/// of weight <= d lies in the span of the degree-<= d generator products.
/// Holds for every multiplicity-free case except the exceptional one
/// (where f_case_obstruction shows a strict gap).  UNSUPPORTED_CASE for
/// case V.
bool hc_surjectivity_check(const JordanCase& c, long d,
                           PolynomialCache* cache = nullptr);

/// The degree-3 gap of the exceptional case: tau_J^*(h_3) is NOT in the
/// span of the degree-<= 3 generator products (only f_1, Q and constants
/// can contribute there, since every F_g has degree >= 5).  Returns true
/// when the gap is present, which is the expected outcome.
bool f_case_obstruction();

/// Transcription-fidelity check of the exceptional-case computation:
/// expresses the pullback of
///   B_3(x1+1/2) + B_3(x2+1/2) + (-3/2)^3 B_3(y1+1/2)
/// in the coordinates
///   a~ = a + b + 7/2,  b~ = a - b + 1/2,  c~ = c
/// and compares exactly with the recorded cubic
///   (81/64) c~^3 - (135/128)(a~+b~) c~^2
///   + ((171/256)(a~^2+b~^2) + (27/128) a~ b~ - 51/64) c~
///   - (53/512)(a~^3+b~^3) - (63/512)(a~^2 b~ + a~ b~^2) + (35/128)(a~+b~).
/// Note the y-part scale: the recorded cubic carries (-theta)^t where the
/// ring member h_3 carries (-theta)^{t-1}; with the ring member's scale
/// the c~^3 coefficient is 9/16 and the c~^2 terms vanish.
bool f_case_coordinate_identity();

/// tau_J^*(h_3) of the exceptional case, as a polynomial in (a, b, c).
MPoly f_case_h3_image();

/// Characterization of the exceptional-case image ring on (a, b, c):
///   (i)  f(a, b, c) = f(a, -b-3, c), and
///   (ii) f(a+1, b+1/2, c) - f(a-1, b-1/2, c) vanishes on the hyperplane
///        a - b + 1/2 = 0 (exact divisibility).
/// Agrees with transporting SuperA(2,1,3/2) membership through tau_J.
bool f_case_membership(const MPoly& p);

} // namespace capelli

#endif
