#include "ghc/exact/linalg.hpp"

#include <utility>

#include "ghc/error.hpp"

namespace ghc::exact {

namespace {

struct Echelon {
  QMatrix rows;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots; // pivot column of each row
};

// Gauss-Jordan elimination; `cols` is the number of leading columns eligible
// for pivoting (trailing columns ride along as an augmented block).
Echelon rref(QMatrix m, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = Rational(1) / m[r][c];
    m[r] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k < m[i].dim(); ++k) m[i][k] -= f * m[r][k];
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

} // namespace

std::size_t rank(std::span<const QVector> rows) {
  if (rows.empty()) return 0;
  require_dim(rows, rows.front().dim(), "rank");
  return rref(QMatrix(rows.begin(), rows.end()), rows.front().dim()).pivots.size();
}

std::vector<QVector> nullspace(std::span<const QVector> rows, std::size_t cols) {
  require_dim(rows, cols, "nullspace");
  Echelon e = rref(QMatrix(rows.begin(), rows.end()), cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(std::span<const QVector> a, const QVector &b, std::size_t cols) {
  require_dim(a, cols, "solve");
  if (a.size() != b.dim()) throw InputError("solve: row count does not match right-hand side");
  QMatrix aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Rational> row(a[i].begin(), a[i].end());
    row.push_back(b[i]);
    aug.emplace_back(std::move(row));
  }
  Echelon e = rref(std::move(aug), cols);
  // Free variables set to zero; inconsistency shows up in the residual.
  QVector x(cols);
  for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = e.rows[i][cols];
  if (mat_vec(a, x) != b) return std::nullopt;
  return x;
}

bool span_contains(std::span<const QVector> super, std::span<const QVector> sub) {
  if (sub.empty()) return true;
  QMatrix all(super.begin(), super.end());
  all.insert(all.end(), sub.begin(), sub.end());
  return rank(super) == rank(all);
}

QMatrix inverse(std::span<const QVector> a) {
  const std::size_t n = a.size();
  require_dim(a, n, "inverse");
  QMatrix aug;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(a[i].begin(), a[i].end());
    for (std::size_t j = 0; j < n; ++j) row.push_back(i == j ? 1 : 0);
    aug.emplace_back(std::move(row));
  }
  Echelon e = rref(std::move(aug), n);
  if (e.pivots.size() != n) throw InputError("inverse: singular matrix");
  QMatrix inv;
  for (std::size_t i = 0; i < n; ++i) {
    inv.emplace_back(std::vector<Rational>(e.rows[i].begin() + static_cast<std::ptrdiff_t>(n),
                                           e.rows[i].end()));
  }
  return inv;
}

QVector mat_vec(std::span<const QVector> a, const QVector &x) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].dot(x);
  return out;
}

} // namespace ghc::exact
