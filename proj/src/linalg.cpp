#include "capelli/linalg.hpp"

#include <map>

#include "capelli/error.hpp"

namespace capelli {

namespace {

// Forward elimination into row echelon form; returns the pivot column of
// each eliminated row.  Operates on an augmented or plain matrix alike.
std::vector<std::size_t> echelonize(std::vector<RationalVector>& rows,
                                    std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t pr = r;
    while (pr < rows.size() && rows[pr][col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[r], rows[pr]);
    const Rational pivot = rows[r][col];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational factor = rows[i][col] / pivot;
      for (std::size_t j = col; j < rows[i].size(); ++j)
        rows[i][j] -= factor * rows[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  return pivot_cols;
}

} // namespace

std::optional<RationalVector> solve_exact(const LinearSystem& sys) {
  const std::size_t m = sys.matrix.size();
  if (sys.rhs.size() != m)
    throw Error("DIMENSION_MISMATCH", "rhs length != row count");
  const std::size_t n = m == 0 ? 0 : sys.matrix[0].size();
  std::vector<RationalVector> aug(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (sys.matrix[i].size() != n)
      throw Error("DIMENSION_MISMATCH", "ragged matrix rows");
    aug[i] = sys.matrix[i];
    aug[i].push_back(sys.rhs[i]);
  }
  const auto pivot_cols = echelonize(aug, n);
  // Inconsistency: a zero row with nonzero rhs.
  for (std::size_t i = pivot_cols.size(); i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;
  // Back substitution; free variables stay 0.
  RationalVector x(n, Rational(0));
  for (std::size_t k = pivot_cols.size(); k-- > 0;) {
    const std::size_t col = pivot_cols[k];
    Rational acc = aug[k][n];
    for (std::size_t j = col + 1; j < n; ++j)
      if (aug[k][j] != 0) acc -= aug[k][j] * x[j];
    x[col] = acc / aug[k][col];
  }
  return x;
}

std::size_t matrix_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != n) throw Error("DIMENSION_MISMATCH", "ragged matrix rows");
  return echelonize(rows, n).size();
}

std::vector<RationalVector> coefficient_matrix(const std::vector<MPoly>& polys) {
  if (polys.empty()) return {};
  const auto& vars = polys[0].vars();
  std::map<Exponents, std::size_t, GradedLexLess> columns;
  for (const auto& p : polys) {
    if (p.vars() != vars)
      throw Error("VARIABLE_MISMATCH", "polynomials over different variable lists");
    for (const auto& [e, c] : p.terms()) columns.emplace(e, 0);
  }
  std::size_t idx = 0;
  for (auto& [e, i] : columns) i = idx++;
  std::vector<RationalVector> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) {
    RationalVector row(columns.size(), Rational(0));
    for (const auto& [e, c] : p.terms()) row[columns.at(e)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

MembershipResult rank_and_membership(const std::vector<MPoly>& span,
                                     const MPoly& target) {
  std::vector<MPoly> all = span;
  all.push_back(target);
  auto rows = coefficient_matrix(all);
  RationalVector target_row = rows.back();
  rows.pop_back();
  const std::size_t span_rank = matrix_rank(rows);
  rows.push_back(std::move(target_row));
  const std::size_t full_rank = matrix_rank(std::move(rows));
  return MembershipResult{full_rank == span_rank, span_rank};
}

} // namespace capelli
