#include "capelli/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "capelli/error.hpp"

namespace capelli {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw Error("BAD_REQUEST", "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error("BAD_REQUEST", "partition parts must be weakly decreasing");
  }
}

long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Partition::part(std::size_t i) const {
  return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
}

bool Partition::is_strict() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

bool desc_lex_less(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 1; i <= n; ++i) {
    if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
  }
  return false;
}

Partition transpose(const Partition& p) {
  if (p.empty()) return Partition{};
  std::vector<long> cols(static_cast<std::size_t>(p.part(1)), 0);
  for (long part : p.parts())
    for (long j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

bool in_hook(const Partition& p, long m, long n) {
  return p.part(static_cast<std::size_t>(m) + 1) <= n;
}

namespace {

// Emits partitions in descending lexicographic order by always trying the
// largest admissible next part first.  `cap(pos)` bounds the part at the
// given 1-based row index.
template <typename Cap>
void enumerate_rec(long remaining, long prev, std::size_t pos, Cap cap,
                   std::vector<long>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  long hi = std::min(remaining, std::min(prev, cap(pos)));
  for (long p = hi; p >= 1; --p) {
    current.push_back(p);
    enumerate_rec(remaining - p, p, pos + 1, cap, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<Partition> enumerate_hook(long m, long n, long d) {
  if (m < 0 || n < 0 || d < 0)
    throw Error("BAD_REQUEST", "enumerate_hook arguments must be >= 0");
  std::vector<Partition> out;
  std::vector<long> current;
  auto cap = [m, n, d](std::size_t pos) {
    return pos <= static_cast<std::size_t>(m) ? d : n;
  };
  enumerate_rec(d, d, 1, cap, current, out);
  return out;
}

std::vector<Partition> enumerate_strict(long n, long d) {
  if (n < 0 || d < 0)
    throw Error("BAD_REQUEST", "enumerate_strict arguments must be >= 0");
  std::vector<Partition> out;
  std::vector<long> current;
  // Strictness: next part <= previous - 1; length <= n.
  std::function<void(long, long, long)> rec = [&](long remaining, long maxpart,
                                                  long rows_left) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (rows_left == 0) return;
    for (long p = std::min(remaining, maxpart); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p - 1, rows_left - 1);
      current.pop_back();
    }
  };
  rec(d, d, n);
  return out;
}

Rational hook_product_theta(const Partition& p, const Rational& theta) {
  const Partition t = transpose(p);
  Rational prod(1);
  for (std::size_t i = 1; i <= p.length(); ++i) {
    for (long j = 1; j <= p.part(i); ++j) {
      const Rational factor = Rational(p.part(i) - j) +
                              theta * Rational(t.part(static_cast<std::size_t>(j)) -
                                               static_cast<long>(i)) +
                              Rational(1);
      prod *= factor;
    }
  }
  if (prod == 0)
    throw Error("ZERO_NORMALIZER",
                "hook product vanishes for lambda=(" + p.str() + "), theta=" +
                    to_string(theta));
  return prod;
}

Rational hook_product_q(const Partition& p) {
  if (!p.is_strict())
    throw Error("NOT_STRICT", "partition (" + p.str() + ") has repeated parts");
  Rational prod(1);
  for (long part : p.parts()) prod *= factorial(part);
  const std::size_t l = p.length();
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = i + 1; j <= l; ++j)
      prod *= frac(p.part(i) + p.part(j), p.part(i) - p.part(j));
  return prod;
}

RationalVector FrobeniusCoords::as_vector() const {
  RationalVector v = x;
  v.insert(v.end(), y.begin(), y.end());
  return v;
}

FrobeniusCoords frobenius_coords(const Partition& p, long m, long n,
                                 const Rational& theta) {
  if (!in_hook(p, m, n))
    throw Error("NOT_IN_HOOK", "lambda=(" + p.str() + ") is not an (" +
                                   std::to_string(m) + "," + std::to_string(n) +
                                   ")-hook partition");
  if (n > 0 && theta == 0)
    throw Error("THETA_ZERO", "theta must be nonzero when n > 0");
  FrobeniusCoords fc;
  fc.theta = theta;
  const Partition t = transpose(p);
  for (long i = 1; i <= m; ++i)
    fc.x.push_back(Rational(p.part(static_cast<std::size_t>(i))) -
                   theta * (Rational(i) - frac(1, 2)) -
                   (Rational(n) - theta * Rational(m)) / 2);
  if (n > 0) {
    const Rational theta_inv = Rational(1) / theta;
    for (long j = 1; j <= n; ++j) {
      // <lambda'_j - m> on integers.
      const long bracket = std::max(t.part(static_cast<std::size_t>(j)) - m, 0L);
      fc.y.push_back(Rational(bracket) -
                     theta_inv * (Rational(j) - frac(1, 2)) +
                     (theta_inv * Rational(n) + Rational(m)) / 2);
    }
  }
  return fc;
}

} // namespace capelli
