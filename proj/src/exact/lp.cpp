#include "ghc/exact/lp.hpp"

#include <vector>

#include "ghc/error.hpp"

namespace ghc::exact {

LpResult lp_feasible(std::span<const LinearEquality> equalities, std::size_t num_vars) {
  for (const auto &eq : equalities) {
    if (eq.coeffs.dim() != num_vars) {
      throw InputError("lp_feasible: equality has " + std::to_string(eq.coeffs.dim()) +
                       " coefficients, expected " + std::to_string(num_vars));
    }
  }
  const std::size_t m = equalities.size();
  const std::size_t n = num_vars;
  const std::size_t cols = n + m; // originals, then one artificial per row

  // tableau[i] holds row i over all columns; rhs[i] its basic value.
  std::vector<std::vector<Rational>> tableau(m, std::vector<Rational>(cols));
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = equalities[i].rhs < 0;
    for (std::size_t j = 0; j < n; ++j) {
      tableau[i][j] = flip ? -equalities[i].coeffs[j] : equalities[i].coeffs[j];
    }
    tableau[i][n + i] = 1;
    rhs[i] = flip ? -equalities[i].rhs : equalities[i].rhs;
    basis[i] = n + i;
  }

  // Phase-one objective w = sum of artificials = w0 + sum_j reduced[j] * x_j.
  std::vector<Rational> reduced(cols);
  Rational w0;
  for (std::size_t i = 0; i < m; ++i) {
    w0 += rhs[i];
    for (std::size_t j = 0; j < n; ++j) reduced[j] -= tableau[i][j];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tableau[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / tableau[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // w is bounded below by zero, so an improving column always has a
    // positive entry.
    if (leave == m) throw InternalError("lp_feasible: unbounded phase-one objective");

    const Rational pivot = tableau[leave][enter];
    for (auto &x : tableau[leave]) x /= pivot;
    rhs[leave] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tableau[i][enter].is_zero()) continue;
      const Rational f = tableau[i][enter];
      for (std::size_t j = 0; j < cols; ++j) tableau[i][j] -= f * tableau[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    const Rational d = reduced[enter];
    for (std::size_t j = 0; j < cols; ++j) reduced[j] -= d * tableau[leave][j];
    w0 += d * rhs[leave];
    basis[leave] = enter;
  }

  LpResult out;
  out.feasible = w0.is_zero();
  if (out.feasible) {
    out.solution = QVector(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) out.solution[basis[i]] = rhs[i];
    }
  }
  return out;
}

} // namespace ghc::exact
