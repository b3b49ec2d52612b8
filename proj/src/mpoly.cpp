#include "capelli/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace capelli {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MPoly p(std::move(vars));
  if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
  return p;
}

MPoly MPoly::variable(const std::vector<std::string>& vars, std::size_t index) {
  if (index >= vars.size())
    throw Error("DIMENSION_MISMATCH", "variable index out of range");
  MPoly p(vars);
  Exponents e(vars.size(), 0);
  e[index] = 1;
  p.terms_[e] = 1;
  return p;
}

MPoly MPoly::monomial(std::vector<std::string> vars, Exponents exps,
                      const Rational& coeff) {
  if (exps.size() != vars.size())
    throw Error("DIMENSION_MISMATCH", "exponent vector length != |vars|");
  MPoly p(std::move(vars));
  if (coeff != 0) p.terms_[std::move(exps)] = coeff;
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](int e) { return e == 0; }));
}

long MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Graded order: the last term has maximal degree.
  const Exponents& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0L);
}

Rational MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::check_same_vars(const MPoly& other) const {
  if (vars_ != other.vars_)
    throw Error("VARIABLE_MISMATCH", "polynomials over different variable lists");
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != vars_.size())
    throw Error("DIMENSION_MISMATCH", "exponent vector length != |vars|");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  check_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  check_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  check_same_vars(other);
  MPoly result(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      result.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(result.terms_);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly p(vars_);
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

MPoly MPoly::pow(long e) const {
  if (e < 0) throw Error("BAD_REQUEST", "negative polynomial power");
  MPoly result = MPoly::constant(vars_, 1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    if (a != 1 || !has_vars) os << to_string(a);
    bool printed = (a != 1 || !has_vars);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

Rational poly_eval(const MPoly& p, const RationalVector& point) {
  if (point.size() != p.var_count())
    throw Error("DIMENSION_MISMATCH", "evaluation point has wrong dimension");
  Rational total(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= rational_pow(point[i], e[i]);
    total += term;
  }
  return total;
}

AffineMap::AffineMap(std::vector<std::string> domain_vars,
                     std::vector<std::string> codomain_vars,
                     std::vector<RationalVector> matrix, RationalVector offset)
    : domain_vars_(std::move(domain_vars)),
      codomain_vars_(std::move(codomain_vars)),
      matrix_(std::move(matrix)),
      offset_(std::move(offset)) {
  if (matrix_.size() != codomain_vars_.size() ||
      offset_.size() != codomain_vars_.size())
    throw Error("DIMENSION_MISMATCH", "affine map row count != codomain dim");
  for (const auto& row : matrix_)
    if (row.size() != domain_vars_.size())
      throw Error("DIMENSION_MISMATCH", "affine map row length != domain dim");
}

AffineMap AffineMap::identity(const std::vector<std::string>& vars) {
  const std::size_t n = vars.size();
  std::vector<RationalVector> mat(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) mat[i][i] = 1;
  return AffineMap(vars, vars, std::move(mat), RationalVector(n, Rational(0)));
}

RationalVector AffineMap::apply(const RationalVector& point) const {
  if (point.size() != domain_dim())
    throw Error("DIMENSION_MISMATCH", "affine map applied to wrong dimension");
  RationalVector out(codomain_dim());
  for (std::size_t i = 0; i < codomain_dim(); ++i) {
    Rational acc = offset_[i];
    for (std::size_t j = 0; j < domain_dim(); ++j) acc += matrix_[i][j] * point[j];
    out[i] = acc;
  }
  return out;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  if (inner.codomain_dim() != domain_dim())
    throw Error("DIMENSION_MISMATCH", "affine composition dimension mismatch");
  std::vector<RationalVector> mat(codomain_dim(),
                                  RationalVector(inner.domain_dim(), Rational(0)));
  for (std::size_t i = 0; i < codomain_dim(); ++i)
    for (std::size_t k = 0; k < domain_dim(); ++k)
      for (std::size_t j = 0; j < inner.domain_dim(); ++j)
        mat[i][j] += matrix_[i][k] * inner.matrix_[k][j];
  RationalVector off = apply(inner.offset_);
  return AffineMap(inner.domain_vars_, codomain_vars_, std::move(mat),
                   std::move(off));
}

AffineMap AffineMap::inverse() const {
  const std::size_t n = domain_dim();
  if (codomain_dim() != n)
    throw Error("NOT_INVERTIBLE", "affine map is not square");
  // Gauss-Jordan on [A | I].
  std::vector<RationalVector> aug(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = matrix_[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("NOT_INVERTIBLE", "singular linear part");
    std::swap(aug[col], aug[pivot]);
    const Rational p = aug[col][col];
    for (auto& x : aug[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  std::vector<RationalVector> inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  // Inverse map: v |-> A^{-1}(v - b).
  RationalVector off(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) off[i] -= inv[i][j] * offset_[j];
  return AffineMap(codomain_vars_, domain_vars_, std::move(inv), std::move(off));
}

MPoly poly_compose_affine(const MPoly& p, const AffineMap& map) {
  if (map.codomain_dim() != p.var_count())
    throw Error("DIMENSION_MISMATCH",
                "affine map codomain does not match polynomial variables");
  const auto& dvars = map.domain_vars();
  // Affine form of each codomain coordinate as a polynomial in the domain.
  std::vector<MPoly> forms;
  forms.reserve(map.codomain_dim());
  for (std::size_t i = 0; i < map.codomain_dim(); ++i) {
    MPoly f = MPoly::constant(dvars, map.offset()[i]);
    for (std::size_t j = 0; j < map.domain_dim(); ++j)
      if (map.matrix()[i][j] != 0)
        f += MPoly::variable(dvars, j) * map.matrix()[i][j];
    forms.push_back(std::move(f));
  }
  // Cache powers of each coordinate form as needed.
  std::vector<std::vector<MPoly>> powers(forms.size());
  auto power_of = [&](std::size_t i, int e) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly::constant(dvars, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * forms[i]);
    return cache[e];
  };
  MPoly result(dvars);
  for (const auto& [e, c] : p.terms()) {
    MPoly term = MPoly::constant(dvars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power_of(i, e[i]);
    result += term;
  }
  return result;
}

} // namespace capelli
