#include "capelli/jordan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "capelli/error.hpp"

namespace capelli {

namespace {

std::vector<std::string> symbol_range(const std::string& stem, long count,
                                      const std::string& suffix = "") {
  std::vector<std::string> out;
  for (long i = 1; i <= count; ++i)
    out.push_back(stem + std::to_string(i) + suffix);
  return out;
}

void append(std::vector<std::string>& dst, std::vector<std::string> src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// <x> = max{x, 0} on integers.
long bracket(long x) { return x > 0 ? x : 0; }

} // namespace

std::string case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
    case CaseTag::IV: return "IV";
    case CaseTag::V: return "V";
    case CaseTag::VI: return "VI";
    case CaseTag::VII: return "VII";
  }
  throw Error("BAD_REQUEST", "unknown case tag");
}

CaseTag case_from_name(const std::string& name) {
  if (name == "I") return CaseTag::I;
  if (name == "II") return CaseTag::II;
  if (name == "III") return CaseTag::III;
  if (name == "IV") return CaseTag::IV;
  if (name == "V") return CaseTag::V;
  if (name == "VI") return CaseTag::VI;
  if (name == "VII") return CaseTag::VII;
  throw Error("BAD_REQUEST", "unknown case '" + name + "' (expected I..VII)");
}

JordanCase::JordanCase(CaseTag tag, long m, long n, Rational t)
    : tag_(tag), m_(m), n_(n), t_(std::move(t)) {}

JordanCase JordanCase::case_I(long m, long n) {
  if (m < 1 || n < 1) throw Error("BAD_REQUEST", "case I requires m, n >= 1");
  return JordanCase(CaseTag::I, m, n, Rational(0));
}

JordanCase JordanCase::case_II(long m, long n) {
  if (m < 1 || n < 1) throw Error("BAD_REQUEST", "case II requires m, n >= 1");
  return JordanCase(CaseTag::II, m, n, Rational(0));
}

JordanCase JordanCase::case_III(long m, long n) {
  if (m < 1 || n < 1) throw Error("BAD_REQUEST", "case III requires m, n >= 1");
  return JordanCase(CaseTag::III, m, n, Rational(0));
}

JordanCase JordanCase::case_IV(const Rational& t) {
  if (t == 0 || t == -1)
    throw Error("BAD_REQUEST", "case IV requires t outside {0, -1}");
  return JordanCase(CaseTag::IV, 0, 0, t);
}

JordanCase JordanCase::case_V() {
  return JordanCase(CaseTag::V, 0, 0, Rational(0));
}

JordanCase JordanCase::case_VI(long n) {
  if (n < 2) throw Error("BAD_REQUEST", "case VI requires n >= 2");
  return JordanCase(CaseTag::VI, 0, n, Rational(0));
}

JordanCase JordanCase::case_VII(long n) {
  if (n < 2) throw Error("BAD_REQUEST", "case VII requires n >= 2");
  return JordanCase(CaseTag::VII, 0, n, Rational(0));
}

bool JordanCase::is_type_a() const {
  return tag_ != CaseTag::VI && tag_ != CaseTag::VII;
}

long JordanCase::r_plus() const {
  switch (tag_) {
    case CaseTag::I:
    case CaseTag::II: return m_;
    case CaseTag::III: return 2;
    case CaseTag::IV: return 1;
    case CaseTag::V: return 2;
    default:
      throw Error("UNSUPPORTED_CASE", "r_plus is defined for type A only");
  }
}

long JordanCase::r_minus() const {
  switch (tag_) {
    case CaseTag::I:
    case CaseTag::II: return n_;
    case CaseTag::III: return 0;
    case CaseTag::IV: return 1;
    case CaseTag::V: return 1;
    default:
      throw Error("UNSUPPORTED_CASE", "r_minus is defined for type A only");
  }
}

long JordanCase::rank() const {
  if (is_type_a())
    throw Error("UNSUPPORTED_CASE", "rank is defined for type Q only");
  return n_;
}

Rational JordanCase::theta() const {
  switch (tag_) {
    case CaseTag::I: return Rational(1);
    case CaseTag::II: return frac(1, 2);
    case CaseTag::III: return frac(m_ - 1, 2) - Rational(n_);
    case CaseTag::IV: return Rational(-1) / t_;
    case CaseTag::V: return frac(3, 2);
    default:
      throw Error("UNSUPPORTED_CASE", "theta_J is defined for type A only");
  }
}

long JordanCase::n_j() const {
  return is_type_a() ? r_plus() + r_minus() : rank();
}

RingSpec JordanCase::ring() const {
  return is_type_a() ? super_a(r_plus(), r_minus(), theta()) : q_type(rank());
}

std::string JordanCase::describe() const {
  std::ostringstream os;
  os << case_name(tag_);
  switch (tag_) {
    case CaseTag::I:
    case CaseTag::II:
    case CaseTag::III: os << "(m=" << m_ << ",n=" << n_ << ")"; break;
    case CaseTag::IV: os << "(t=" << to_string(t_) << ")"; break;
    case CaseTag::V: break;
    case CaseTag::VI:
    case CaseTag::VII: os << "(n=" << n_ << ")"; break;
  }
  return os.str();
}

std::string Weight::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!first) os << " + ";
    os << to_string(coeffs[i]) << "*" << basis[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool admissibility_set_contains(long m, long n, const Rational& theta) {
  if (m < 0 || n < 0)
    throw Error("BAD_REQUEST", "admissibility set requires m, n >= 0");
  if (n == 0) {
    // { -a/b : a >= 1, 1 <= b <= m-1 }: negative rationals whose reduced
    // denominator is at most m-1.
    return theta < 0 && denominator(theta) <= m - 1;
  }
  if (m == 0) {
    // { -a/b : 0 <= a <= n, b >= 1 }: zero, or negative with reduced
    // numerator magnitude at most n.
    if (theta == 0) return true;
    return theta < 0 && -numerator(theta) <= n;
  }
  return theta <= 0;
}

bool is_multiplicity_free(const JordanCase& c) {
  if (!c.is_type_a()) return true;
  return !admissibility_set_contains(c.r_plus(), c.r_minus(), c.theta());
}

namespace {

void require_multiplicity_free(const JordanCase& c) {
  if (is_multiplicity_free(c) || c.diagnostic_override()) return;
  throw Error("NOT_MULTIPLICITY_FREE",
              c.describe() + " is not multiplicity-free: theta_J = " +
                  to_string(c.theta()) + " lies in S(" +
                  std::to_string(c.r_plus()) + "," +
                  std::to_string(c.r_minus()) + ")");
}

void require_shape(const JordanCase& c, const Partition& lambda) {
  if (c.is_type_a()) {
    if (!in_hook(lambda, c.r_plus(), c.r_minus()))
      throw Error("NOT_IN_OMEGA",
                  "lambda=(" + lambda.str() + ") is not in H(" +
                      std::to_string(c.r_plus()) + "," +
                      std::to_string(c.r_minus()) + ")");
  } else {
    if (!lambda.is_strict() || lambda.length() > static_cast<std::size_t>(c.rank()))
      throw Error("NOT_IN_OMEGA",
                  "lambda=(" + lambda.str() + ") is not in DP(" +
                      std::to_string(c.rank()) + ")");
  }
}

} // namespace

std::vector<Partition> omega(const JordanCase& c, long d) {
  require_multiplicity_free(c);
  return c.is_type_a() ? enumerate_hook(c.r_plus(), c.r_minus(), d)
                       : enumerate_strict(c.rank(), d);
}

std::vector<Partition> omega_up_to(const JordanCase& c, long d) {
  std::vector<Partition> all;
  for (long k = 0; k <= d; ++k) {
    auto level = omega(c, k);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

namespace {

std::vector<std::string> weight_basis(const JordanCase& c) {
  std::vector<std::string> basis;
  switch (c.tag()) {
    case CaseTag::I:
      append(basis, symbol_range("eps", c.m()));
      append(basis, symbol_range("delta", c.n()));
      append(basis, symbol_range("eps", c.m(), "'"));
      append(basis, symbol_range("delta", c.n(), "'"));
      break;
    case CaseTag::II:
      append(basis, symbol_range("eps", c.m()));
      append(basis, symbol_range("delta", 2 * c.n()));
      break;
    case CaseTag::III:
      basis = {"eps1", "zeta"};
      break;
    case CaseTag::IV:
      basis = {"eps1", "delta1", "delta2"};
      break;
    case CaseTag::V:
      basis = {"eps1", "delta1", "delta2", "zeta"};
      break;
    case CaseTag::VI:
      append(basis, symbol_range("eps", c.n()));
      append(basis, symbol_range("delta", c.n()));
      break;
    case CaseTag::VII:
      append(basis, symbol_range("eps", c.n()));
      append(basis, symbol_range("eps", c.n(), "'"));
      break;
  }
  return basis;
}

} // namespace

Weight highest_weight(const JordanCase& c, const Partition& lambda) {
  require_shape(c, lambda);
  Weight w;
  w.basis = weight_basis(c);
  const long d = lambda.weight();
  const Partition tp = transpose(lambda);
  switch (c.tag()) {
    case CaseTag::I: {
      // (-st, st) with st = sum lambda_i eps_i + sum <lambda'_j - m> delta_j.
      RationalVector st;
      for (long i = 1; i <= c.m(); ++i)
        st.push_back(Rational(lambda.part(static_cast<std::size_t>(i))));
      for (long j = 1; j <= c.n(); ++j)
        st.push_back(Rational(bracket(tp.part(static_cast<std::size_t>(j)) - c.m())));
      for (const auto& v : st) w.coeffs.push_back(-v);
      for (const auto& v : st) w.coeffs.push_back(v);
      break;
    }
    case CaseTag::II: {
      for (long i = 1; i <= c.m(); ++i)
        w.coeffs.push_back(Rational(-2 * lambda.part(static_cast<std::size_t>(i))));
      for (long j = 1; j <= c.n(); ++j) {
        const Rational b(-bracket(tp.part(static_cast<std::size_t>(j)) - c.m()));
        w.coeffs.push_back(b);
        w.coeffs.push_back(b);
      }
      break;
    }
    case CaseTag::III:
      w.coeffs = {Rational(lambda.part(1) - lambda.part(2)),
                  Rational(lambda.part(1) + lambda.part(2))};
      break;
    case CaseTag::IV: {
      const Rational& t = c.t();
      const Rational a =
          (Rational(3) + t) / (Rational(1) + t) * Rational(d) -
          Rational(2 * lambda.part(1));
      const Rational b =
          Rational(lambda.part(1)) -
          (Rational(2) + t) / (Rational(1) + t) * Rational(d);
      w.coeffs = {a, b, b};
      break;
    }
    case CaseTag::V: {
      const Rational a(3 * d - 2 * lambda.part(1) - 2 * lambda.part(2));
      const Rational b(lambda.part(1) - lambda.part(2));
      w.coeffs = {a, b, b, Rational(d)};
      break;
    }
    case CaseTag::VI: {
      RationalVector neg;
      for (long i = 1; i <= c.n(); ++i)
        neg.push_back(Rational(-lambda.part(static_cast<std::size_t>(i))));
      w.coeffs = neg;
      w.coeffs.insert(w.coeffs.end(), neg.begin(), neg.end());
      break;
    }
    case CaseTag::VII: {
      for (long i = 1; i <= c.n(); ++i)
        w.coeffs.push_back(Rational(-lambda.part(static_cast<std::size_t>(i))));
      for (long i = 1; i <= c.n(); ++i)
        w.coeffs.push_back(Rational(lambda.part(static_cast<std::size_t>(i))));
      break;
    }
  }
  return w;
}

std::vector<std::string> a_omega_vars(const JordanCase& c) {
  switch (c.tag()) {
    case CaseTag::I:
    case CaseTag::II: {
      auto vars = symbol_range("a", c.m());
      append(vars, symbol_range("b", c.n()));
      return vars;
    }
    case CaseTag::III:
    case CaseTag::IV: return {"a", "b"};
    case CaseTag::V: return {"a", "b", "c"};
    case CaseTag::VI:
    case CaseTag::VII: return symbol_range("a", c.n());
  }
  throw Error("BAD_REQUEST", "unknown case tag");
}

RationalVector a_omega_coordinates(const JordanCase& c, const Weight& w) {
  if (w.basis != weight_basis(c))
    throw Error("VARIABLE_MISMATCH", "weight basis does not match the case");
  const auto& v = w.coeffs;
  auto check_tied = [&](std::size_t i, std::size_t j) {
    if (v[i] != v[j])
      throw Error("BAD_REQUEST", "weight is not on the a_Omega slice");
  };
  RationalVector out;
  switch (c.tag()) {
    case CaseTag::I: {
      const std::size_t half = static_cast<std::size_t>(c.m() + c.n());
      for (std::size_t i = 0; i < half; ++i)
        if (v[i] != -v[half + i])
          throw Error("BAD_REQUEST", "weight is not of the form (-mu, mu)");
      out.assign(v.begin() + static_cast<long>(half), v.end());
      break;
    }
    case CaseTag::II: {
      for (long i = 0; i < c.m(); ++i) out.push_back(v[static_cast<std::size_t>(i)]);
      for (long j = 0; j < c.n(); ++j) {
        const std::size_t lo = static_cast<std::size_t>(c.m() + 2 * j);
        check_tied(lo, lo + 1);
        out.push_back(v[lo]);
      }
      break;
    }
    case CaseTag::III:
      out = {v[0], v[1]};
      break;
    case CaseTag::IV:
      check_tied(1, 2);
      out = {v[0], v[1]};
      break;
    case CaseTag::V:
      check_tied(1, 2);
      out = {v[0], v[1], v[3]};
      break;
    case CaseTag::VI: {
      const std::size_t n = static_cast<std::size_t>(c.n());
      for (std::size_t i = 0; i < n; ++i) {
        check_tied(i, n + i);
        out.push_back(v[i]);
      }
      break;
    }
    case CaseTag::VII: {
      const std::size_t n = static_cast<std::size_t>(c.n());
      for (std::size_t i = 0; i < n; ++i)
        if (v[i] != -v[n + i])
          throw Error("BAD_REQUEST", "weight is not of the form (-mu, mu)");
      out.assign(v.begin() + static_cast<long>(n), v.end());
      break;
    }
  }
  return out;
}

AffineMap tau(const JordanCase& c) {
  const auto dom = a_omega_vars(c);
  const auto cod = c.ring().variables();
  const std::size_t rows = cod.size(), cols = dom.size();
  std::vector<RationalVector> mat(rows, RationalVector(cols, Rational(0)));
  RationalVector off(rows, Rational(0));
  switch (c.tag()) {
    case CaseTag::I: {
      const long m = c.m(), n = c.n();
      for (long i = 1; i <= m; ++i) {
        mat[i - 1][i - 1] = 1;
        off[i - 1] = frac(m - 2 * i + 1 - n, 2);
      }
      for (long j = 1; j <= n; ++j) {
        mat[m + j - 1][m + j - 1] = 1;
        off[m + j - 1] = frac(m - 2 * j + 1 + n, 2);
      }
      break;
    }
    case CaseTag::II: {
      const long m = c.m(), n = c.n();
      for (long i = 1; i <= m; ++i) {
        mat[i - 1][i - 1] = frac(-1, 2);
        off[i - 1] = frac(m + 1 - 2 * n - 2 * i, 4);
      }
      for (long j = 1; j <= n; ++j) {
        mat[m + j - 1][m + j - 1] = -1;
        off[m + j - 1] = frac(m + 2 + 2 * n - 4 * j, 2);
      }
      break;
    }
    case CaseTag::III: {
      const Rational half(1, 2);
      mat[0][0] = half;
      mat[0][1] = half;
      off[0] = frac(c.m() - 2 * c.n() - 1, 2);
      mat[1][0] = -half;
      mat[1][1] = half;
      break;
    }
    case CaseTag::IV: {
      // Table row as printed; see the diagnostic suite for its relation
      // to the Frobenius convention.
      const Rational t = c.t();
      const Rational one_plus_t = Rational(1) + t;
      mat[0][0] = -(Rational(2) + t) / one_plus_t;
      mat[0][1] = -(Rational(3) + t) / one_plus_t;
      off[0] = frac(-1, 2);
      mat[1][0] = Rational(1) / one_plus_t;
      mat[1][1] = -(Rational(3) + t) / one_plus_t;
      off[1] = (Rational(5) + t) / one_plus_t;
      break;
    }
    case CaseTag::V: {
      mat[0] = {frac(-1, 4), frac(1, 2), frac(3, 4)};
      off[0] = frac(1, 4);
      mat[1] = {frac(-1, 4), frac(-1, 2), frac(3, 4)};
      off[1] = frac(-5, 4);
      mat[2] = {frac(1, 2), Rational(0), frac(-1, 2)};
      off[2] = Rational(1);
      break;
    }
    case CaseTag::VI:
      for (std::size_t i = 0; i < rows; ++i) mat[i][i] = -1;
      break;
    case CaseTag::VII:
      for (std::size_t i = 0; i < rows; ++i) mat[i][i] = 1;
      break;
  }
  return AffineMap(dom, cod, std::move(mat), std::move(off));
}

RationalVector composite_coordinates(const JordanCase& c, const Partition& lambda) {
  return tau(c).apply(a_omega_coordinates(c, highest_weight(c, lambda)));
}

RootDatum root_datum(const JordanCase& c) {
  RootDatum rd;
  if (c.is_type_a()) {
    rd.sigma_type = "A(" + std::to_string(c.r_plus() - 1) + "," +
                    std::to_string(c.r_minus() - 1) + ")";
    rd.kappa = -c.theta();
    switch (c.tag()) {
      case CaseTag::I:
        rd.class_dims = {{"eps-eps", {2, 0}},
                         {"eps-delta", {0, 2}},
                         {"delta-delta", {2, 0}}};
        break;
      case CaseTag::II:
        rd.class_dims = {{"eps-eps", {1, 0}},
                         {"eps-delta", {0, 2}},
                         {"delta-delta", {4, 0}}};
        break;
      case CaseTag::III:
        rd.class_dims = {{"eps-eps", {c.m() - 1, 2 * c.n()}}};
        break;
      case CaseTag::IV:
        rd.class_dims = {{"eps-delta", {0, 2}}};
        break;
      case CaseTag::V:
        rd.class_dims = {{"eps-eps", {3, 0}}, {"eps-delta", {0, 2}}};
        break;
      default: break;
    }
    // mult(alpha) = -(1/2) sdim(g_alpha) must give (kappa, 1, kappa^{-1}).
    for (const auto& [cls, dims] : rd.class_dims) {
      const Rational mult = frac(-(dims.even - dims.odd), 2);
      Rational expected;
      if (cls == "eps-eps") expected = rd.kappa;
      else if (cls == "eps-delta") expected = Rational(1);
      else expected = Rational(1) / rd.kappa;
      if (mult != expected)
        throw Error("BAD_REQUEST",
                    "root multiplicity inconsistency in class " + cls +
                        " of " + c.describe());
    }
  } else {
    rd.sigma_type = "Q(" + std::to_string(c.rank()) + ")";
    rd.kappa = 0;
    rd.class_dims = {{"eps-eps", {2, 2}},
                     {"eps-delta", {2, 2}},
                     {"delta-delta", {2, 2}}};
    for (const auto& [cls, dims] : rd.class_dims)
      if (dims.even != dims.odd)
        throw Error("BAD_REQUEST", "type Q root spaces must have sdim 0");
  }
  return rd;
}

std::vector<Weight> case5_weights_E_d(long d) {
  if (d < 0) throw Error("BAD_REQUEST", "case5_weights_E_d requires d >= 0");
  const std::vector<std::string> basis{"eps1", "delta1", "delta2", "zeta"};
  std::set<Weight> dedup;
  for (long s = 2; s <= d; ++s) {
    for (long r = 0; 2 * r + s <= d; ++r) {
      // q = d - 2r - s >= 0 counts copies of u; it does not enter the weight.
      const Rational e1(d + 2 * s - 4);
      const Rational dd(d - 2 * r - s);
      dedup.insert(Weight{basis, {e1, dd, dd, Rational(d)}});
    }
  }
  dedup.insert(Weight{basis, {Rational(d), Rational(d), Rational(d), Rational(d)}});
  return {dedup.begin(), dedup.end()};
}

DimensionIdentity case5_dimension_identity(long d) {
  if (d < 1) throw Error("BAD_REQUEST", "case5_dimension_identity requires d >= 1");
  auto N = [](long k) { return (2 * k + 3) * (k + 2) * (k + 1) / 6; };
  long lhs = N(d) + N(d - 1);
  for (long a = 0; a <= d - 2; ++a)
    lhs += 8 * binomial(d - a + 2, 4).get_si();
  const long rhs = (d + 1) * (2 * d * d + 4 * d + 3) / 3 +
                   (d + 3) * (d + 2) * (d + 1) * d * (d - 1) / 15;
  return DimensionIdentity{lhs, rhs};
}

std::vector<Weight> case4_eta_weights(const Rational& t, long d) {
  if (t == 0 || t == -1)
    throw Error("BAD_REQUEST", "case IV requires t outside {0, -1}");
  if (d < 1) throw Error("BAD_REQUEST", "case4_eta_weights requires d >= 1");
  const std::vector<std::string> basis{"eps1", "delta1", "delta2"};
  const Rational one_plus_t = Rational(1) + t;
  std::vector<Weight> out;
  for (long k = 1; k <= d; ++k) {
    const Rational a =
        Rational(d) * (Rational(3) + t) / one_plus_t - Rational(2 * k);
    const Rational b =
        Rational(k) - Rational(d) * (Rational(2) + t) / one_plus_t;
    out.push_back(Weight{basis, {a, b, b}});
  }
  return out;
}

} // namespace capelli
