#include "gaudin/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaudin {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(QMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(QMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(row_reduce(m, m.front().size()).size());
}

Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse needs a square matrix");
    std::copy(m[i].begin(), m[i].end(), aug[i].begin());
    aug[i][n + i] = 1;
  }
  auto pivots = row_reduce(aug, n);
  if (pivots.size() != n) return std::nullopt;
  QMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) std::copy(aug[i].begin() + static_cast<long>(n), aug[i].end(), inv[i].begin());
  return inv;
}

std::optional<std::vector<Rational>> solve(const QMatrix& A, const std::vector<Rational>& b) {
  if (A.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t ncols = A.empty() ? 0 : A.front().size();
  QMatrix aug = A;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug, ncols + 1);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  std::vector<Rational> x(ncols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][ncols];
  return x;
}

CoefficientMatrix coefficient_matrix(const std::vector<NCPoly>& polys) {
  std::map<Monomial, std::size_t, MonomialOrder> index;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) index.emplace(m, 0);
  CoefficientMatrix out;
  for (auto& [m, i] : index) {
    i = out.columns.size();
    out.columns.push_back(m);
  }
  for (const auto& p : polys) {
    std::vector<Rational> row(out.columns.size());
    for (const auto& [m, c] : p.terms()) row[index.at(m)] = c;
    out.rows.push_back(std::move(row));
  }
  return out;
}

int span_rank(const std::vector<NCPoly>& polys) { return rank(coefficient_matrix(polys).rows); }

std::optional<std::vector<Rational>> express_in_span(const NCPoly& target, const std::vector<NCPoly>& basis) {
  std::vector<NCPoly> all = basis;
  all.push_back(target);
  CoefficientMatrix cm = coefficient_matrix(all);
  // Columns of A are the basis vectors; the system is indexed by monomials.
  const std::size_t nm = cm.columns.size();
  QMatrix A(nm, std::vector<Rational>(basis.size()));
  std::vector<Rational> b(nm);
  for (std::size_t m = 0; m < nm; ++m) {
    for (std::size_t j = 0; j < basis.size(); ++j) A[m][j] = cm.rows[j][m];
    b[m] = cm.rows.back()[m];
  }
  return solve(A, b);
}

}  // namespace gaudin
