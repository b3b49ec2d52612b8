#ifndef CAPELLI_LINALG_HPP
#define CAPELLI_LINALG_HPP

#include <optional>
#include <vector>

#include "capelli/mpoly.hpp"
#include "capelli/rational.hpp"

namespace capelli {

/// A rectangular exact linear system  matrix * x = rhs.
/// All rows must have the same length.
struct LinearSystem {
  std::vector<RationalVector> matrix;
  RationalVector rhs;
};

/// Row-reduced Gaussian elimination with first-nonzero-column pivoting
/// (leftmost pivot column, first row with a nonzero entry).  Returns one
/// solution with all free variables set to 0, or nullopt when the system
/// is inconsistent.  Deterministic: identical input gives identical output.
std::optional<RationalVector> solve_exact(const LinearSystem& sys);

/// Exact rank of a list of row vectors.
std::size_t matrix_rank(std::vector<RationalVector> rows);

struct MembershipResult {
  bool in_span;
  std::size_t rank; // rank of the span alone
};

/// Expresses the polynomials as coefficient vectors over the union of the
/// occurring monomials and tests whether target lies in the rational span.
MembershipResult rank_and_membership(const std::vector<MPoly>& span,
                                     const MPoly& target);

/// Coefficient rows of `polys` over the union of their monomials, in
/// canonical graded-lex column order.  All polynomials must share one
/// variable list.
std::vector<RationalVector> coefficient_matrix(const std::vector<MPoly>& polys);

} // namespace capelli

#endif
