#ifndef CAPELLI_PARTITIONS_HPP
#define CAPELLI_PARTITIONS_HPP

#include <compare>
#include <string>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

/// Integer partition: weakly decreasing positive parts, trailing zeros
/// never stored.  The empty partition is Partition{}.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long weight() const;
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// i-th part, 1-based; 0 beyond the length.
  long part(std::size_t i) const;
  bool is_strict() const;

  friend auto operator<=>(const Partition& a, const Partition& b) = default;

  /// "4,2,1"; empty partition renders as "".
  std::string str() const;

private:
  std::vector<long> parts_;
};

/// Descending lexicographic comparison, the enumeration order used
/// throughout: (3) before (2,1) before (1,1,1).
bool desc_lex_less(const Partition& a, const Partition& b);

Partition transpose(const Partition& p);

/// lambda_{m+1} <= n.
bool in_hook(const Partition& p, long m, long n);

/// All (m,n)-hook partitions of weight d, descending lexicographic.
std::vector<Partition> enumerate_hook(long m, long n, long d);

/// Strict partitions of weight d with at most n parts, descending
/// lexicographic.
std::vector<Partition> enumerate_strict(long n, long d);

/// H_theta(lambda) = prod over boxes (i,j) of
///   (lambda_i - j + theta*(lambda'_j - i) + 1).
/// Throws ZERO_NORMALIZER when the product vanishes (inadmissible theta
/// for this shape).
Rational hook_product_theta(const Partition& p, const Rational& theta);

/// H(lambda) = lambda! * prod_{i<j<=l} (lambda_i+lambda_j)/(lambda_i-lambda_j)
/// for strict lambda; NOT_STRICT otherwise.
Rational hook_product_q(const Partition& p);

/// Frobenius coordinates of a hook partition in the (m,n,theta) context:
///   p_i = lambda_i - theta*(i - 1/2) - (n - theta*m)/2           (i <= m)
///   q_j = <lambda'_j - m> - theta^{-1}*(j - 1/2) + (theta^{-1} n + m)/2
/// with <x> = max{x, 0} taken on integers.
struct FrobeniusCoords {
  RationalVector x; // length m
  RationalVector y; // length n
  Rational theta;

  RationalVector as_vector() const; // x followed by y
};

FrobeniusCoords frobenius_coords(const Partition& p, long m, long n,
                                 const Rational& theta);

} // namespace capelli

#endif
