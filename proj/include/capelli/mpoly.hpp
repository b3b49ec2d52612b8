#ifndef CAPELLI_MPOLY_HPP
#define CAPELLI_MPOLY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

/// Exponent vector of a monomial; length always equals the ambient
/// variable count of the owning polynomial.
using Exponents = std::vector<int>;

/// Graded-lexicographic monomial order: total degree first, then
/// lexicographic on the exponent vector in variable-list order.  This is
/// the canonical term order for iteration and serialization.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Rational in a named variable list.
///
/// Invariants: no zero coefficients are stored, and every exponent vector
/// has length |vars()|.  Arithmetic between polynomials requires identical
/// variable lists (VARIABLE_MISMATCH otherwise).
class MPoly {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  MPoly() = default; // zero polynomial in zero variables
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPoly constant(std::vector<std::string> vars, const Rational& c);
  static MPoly variable(const std::vector<std::string>& vars, std::size_t index);
  static MPoly monomial(std::vector<std::string> vars, Exponents exps,
                        const Rational& coeff);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;
  Rational coeff(const Exponents& e) const;
  std::size_t var_count() const { return vars_.size(); }

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& s);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  MPoly operator-() const;

  MPoly pow(long e) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Human-readable form, e.g. "x^2*y - 1/2"; terms in canonical order.
  std::string str() const;

  void add_term(const Exponents& e, const Rational& c);

private:
  void check_same_vars(const MPoly& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Exact affine map v |-> A v + b between rational coordinate spaces with
/// named coordinates.  Houses the tau_J maps and all coordinate changes.
class AffineMap {
public:
  AffineMap(std::vector<std::string> domain_vars,
            std::vector<std::string> codomain_vars,
            std::vector<RationalVector> matrix, RationalVector offset);

  static AffineMap identity(const std::vector<std::string>& vars);

  std::size_t domain_dim() const { return domain_vars_.size(); }
  std::size_t codomain_dim() const { return codomain_vars_.size(); }
  const std::vector<std::string>& domain_vars() const { return domain_vars_; }
  const std::vector<std::string>& codomain_vars() const { return codomain_vars_; }
  const std::vector<RationalVector>& matrix() const { return matrix_; }
  const RationalVector& offset() const { return offset_; }

  RationalVector apply(const RationalVector& point) const;

  /// this after inner: (this o inner)(v) = this(inner(v)).
  AffineMap compose(const AffineMap& inner) const;

  /// Exact inverse; requires a square invertible linear part
  /// (NOT_INVERTIBLE otherwise).
  AffineMap inverse() const;

private:
  std::vector<std::string> domain_vars_;
  std::vector<std::string> codomain_vars_;
  std::vector<RationalVector> matrix_; // codomain_dim x domain_dim
  RationalVector offset_;              // codomain_dim
};

/// Exact evaluation; |point| must equal |p.vars()|.
Rational poly_eval(const MPoly& p, const RationalVector& point);

/// Pullback p o map: substitute the i-th variable of p by the i-th affine
/// coordinate form of `map`; the result lives over map.domain_vars().
/// Requires map.codomain_dim() == |p.vars()|.
MPoly poly_compose_affine(const MPoly& p, const AffineMap& map);

} // namespace capelli

#endif
