#include "capelli/rings.hpp"

#include <algorithm>
#include <functional>

#include "capelli/bernoulli.hpp"
#include "capelli/error.hpp"
#include "capelli/linalg.hpp"

namespace capelli {

namespace {

std::vector<std::string> indexed(const std::string& stem, long count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (long i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

// p with variables i and j swapped.
MPoly swap_vars(const MPoly& p, std::size_t i, std::size_t j) {
  MPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    std::swap(f[i], f[j]);
    out.add_term(f, c);
  }
  return out;
}

// p with every variable shifted by delta: p(v + delta).
MPoly shift_vars(const MPoly& p, const RationalVector& delta) {
  const std::size_t n = p.var_count();
  std::vector<RationalVector> mat(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) mat[i][i] = 1;
  return poly_compose_affine(p, AffineMap(p.vars(), p.vars(), mat, delta));
}

// p with variable `from` replaced by coeff * variable `to`.
MPoly substitute_scaled_var(const MPoly& p, std::size_t from, std::size_t to,
                            const Rational& coeff) {
  const std::size_t n = p.var_count();
  std::vector<RationalVector> mat(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) mat[i][i] = 1;
  mat[from][from] = 0;
  mat[from][to] = coeff;
  return poly_compose_affine(p, AffineMap(p.vars(), p.vars(), mat,
                                          RationalVector(n, Rational(0))));
}

bool symmetric_in_block(const MPoly& p, std::size_t begin, std::size_t count) {
  for (std::size_t k = 0; k + 1 < count; ++k)
    if (swap_vars(p, begin + k, begin + k + 1) != p) return false;
  return true;
}

// Multi-indices (m_1, ..., m_k) with sum weights[j]*m_j <= d, ordered by
// lexicographic comparison of the reversed vector, so that powers of the
// first generator come before anything involving later ones:
//   1, g1, g1^2, ..., g2, g1*g2, ...
std::vector<std::vector<long>> weighted_multi_indices(
    const std::vector<long>& weights, long d) {
  std::vector<std::vector<long>> out;
  std::vector<long> current(weights.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long left) {
    if (pos == weights.size()) {
      out.push_back(current);
      return;
    }
    // Iterate the last generator outermost via recursion order below.
    for (long e = 0; e * weights[pos] <= left; ++e) {
      current[pos] = e;
      rec(pos + 1, left - e * weights[pos]);
    }
    current[pos] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                        b.rend());
  });
  return out;
}

} // namespace

std::vector<std::string> RingSpec::variables() const {
  if (kind == RingKind::QType) return indexed("x", n);
  std::vector<std::string> names = indexed("x", m);
  auto ys = indexed("y", n);
  names.insert(names.end(), ys.begin(), ys.end());
  return names;
}

RingSpec super_a(long m, long n, const Rational& theta) {
  if (m < 0 || n < 0)
    throw Error("BAD_REQUEST", "super_a requires m, n >= 0");
  if (n > 0 && theta == 0)
    throw Error("THETA_ZERO", "theta must be nonzero when n > 0");
  return RingSpec{RingKind::SuperA, m, n, theta};
}

RingSpec q_type(long n) {
  if (n < 1) throw Error("BAD_REQUEST", "q_type requires n >= 1");
  return RingSpec{RingKind::QType, 0, n, Rational(0)};
}

bool is_member(const RingSpec& spec, const MPoly& p) {
  if (p.vars() != spec.variables())
    throw Error("VARIABLE_MISMATCH", "polynomial not over the ring's variables");
  const std::size_t m = static_cast<std::size_t>(spec.kind == RingKind::QType
                                                     ? spec.n
                                                     : spec.m);
  if (spec.kind == RingKind::QType) {
    if (!symmetric_in_block(p, 0, m)) return false;
    if (spec.n < 2) return true;
    // f(t, -t, x_3, ...) independent of t: substitute x_2 := -x_1 and
    // require that x_1 no longer occurs.
    const MPoly q = substitute_scaled_var(p, 1, 0, Rational(-1));
    for (const auto& [e, c] : q.terms())
      if (e[0] != 0) return false;
    return true;
  }
  const std::size_t n = static_cast<std::size_t>(spec.n);
  if (!symmetric_in_block(p, 0, m)) return false;
  if (!symmetric_in_block(p, m, n)) return false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector up(p.var_count(), Rational(0));
      up[i] = frac(1, 2);
      up[m + j] = frac(-1, 2);
      RationalVector down(p.var_count(), Rational(0));
      down[i] = frac(-1, 2);
      down[m + j] = frac(1, 2);
      MPoly diff = shift_vars(p, up) - shift_vars(p, down);
      // Divisibility by x_i + theta*y_j: substitute x_i := -theta*y_j and
      // require the remainder to vanish identically.
      const MPoly rem = substitute_scaled_var(diff, i, m + j, -spec.theta);
      if (!rem.is_zero()) return false;
    }
  }
  return true;
}

MPoly deformed_power_sum(const RingSpec& spec, long t) {
  if (spec.kind != RingKind::SuperA)
    throw Error("BAD_REQUEST", "deformed_power_sum requires a SuperA ring");
  if (t < 1) throw Error("BAD_REQUEST", "deformed_power_sum requires t >= 1");
  const auto vars = spec.variables();
  const MPoly bt = bernoulli_poly(t);
  const Rational half(1, 2);
  auto bt_at = [&](std::size_t var_index) {
    // B_t(v + 1/2) via the affine substitution z |-> v + 1/2.
    std::vector<RationalVector> mat(1, RationalVector(vars.size(), Rational(0)));
    mat[0][var_index] = 1;
    return poly_compose_affine(bt, AffineMap(vars, {"z"}, mat, {half}));
  };
  MPoly h(vars);
  for (long i = 0; i < spec.m; ++i) h += bt_at(static_cast<std::size_t>(i));
  if (spec.n > 0) {
    const Rational scale = rational_pow(-spec.theta, t - 1);
    for (long j = 0; j < spec.n; ++j)
      h += bt_at(static_cast<std::size_t>(spec.m + j)) * scale;
  }
  return h;
}

MPoly odd_power_sum(const RingSpec& spec, long r) {
  if (spec.kind != RingKind::QType)
    throw Error("BAD_REQUEST", "odd_power_sum requires a QType ring");
  if (r < 1 || r % 2 == 0)
    throw Error("EVEN_DEGREE", "power sum degree must be odd and >= 1");
  const auto vars = spec.variables();
  MPoly p(vars);
  for (long i = 0; i < spec.n; ++i)
    p += MPoly::variable(vars, static_cast<std::size_t>(i)).pow(r);
  return p;
}

std::vector<MPoly> spanning_set(const RingSpec& spec, long d) {
  if (d < 0) throw Error("BAD_REQUEST", "spanning_set requires d >= 0");
  const auto vars = spec.variables();
  std::vector<MPoly> generators;
  std::vector<long> weights;
  if (spec.kind == RingKind::SuperA) {
    for (long t = 1; t <= d; ++t) {
      generators.push_back(deformed_power_sum(spec, t));
      weights.push_back(t);
    }
  } else if (spec.n == 1) {
    // Gamma_1 is the full polynomial ring in x_1.
    std::vector<MPoly> out;
    for (long k = 0; k <= d; ++k)
      out.push_back(MPoly::variable(vars, 0).pow(k));
    return out;
  } else {
    for (long r = 1; r <= d; r += 2) {
      generators.push_back(odd_power_sum(spec, r));
      weights.push_back(r);
    }
  }
  std::vector<MPoly> out;
  for (const auto& mi : weighted_multi_indices(weights, d)) {
    MPoly prod = MPoly::constant(vars, 1);
    for (std::size_t j = 0; j < mi.size(); ++j)
      if (mi[j] > 0) prod *= generators[j].pow(mi[j]);
    out.push_back(std::move(prod));
  }
  return out;
}

long filtered_dimension(const RingSpec& spec, long d) {
  return static_cast<long>(matrix_rank(coefficient_matrix(spanning_set(spec, d))));
}

} // namespace capelli
