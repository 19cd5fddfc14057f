#include "ghc/exact/cone.hpp"

#include "ghc/error.hpp"
#include "ghc/exact/lp.hpp"

namespace ghc::exact {

QVector combine(std::span<const QVector> generators, std::span<const Rational> coefficients) {
  if (generators.size() != coefficients.size()) {
    throw InputError("combine: generator and coefficient counts differ");
  }
  if (generators.empty()) throw InputError("combine: no generators");
  QVector sum(generators.front().dim());
  for (std::size_t i = 0; i < generators.size(); ++i) sum += generators[i] * coefficients[i];
  return sum;
}

ConeMembership cone_member(const QVector &v, std::span<const QVector> generators) {
  require_dim(generators, v.dim(), "cone_member");
  std::vector<LinearEquality> rows;
  rows.reserve(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) {
    QVector coeffs(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) coeffs[i] = generators[i][k];
    rows.push_back({std::move(coeffs), v[k]});
  }
  LpResult lp = lp_feasible(rows, generators.size());
  ConeMembership out;
  out.member = lp.feasible;
  if (lp.feasible) out.coefficients.assign(lp.solution.begin(), lp.solution.end());
  return out;
}

ConeIntersection cones_intersect_trivially(std::span<const QVector> gens_a,
                                           std::span<const QVector> gens_b) {
  if (gens_a.empty() || gens_b.empty()) return {};
  const std::size_t dim = gens_a.front().dim();
  require_dim(gens_a, dim, "cones_intersect_trivially");
  require_dim(gens_b, dim, "cones_intersect_trivially");

  const std::size_t na = gens_a.size();
  const std::size_t nb = gens_b.size();

  // Variables (a, b) >= 0 with sum a_i A_i = sum b_j B_j. A common nonzero
  // point exists iff, for some coordinate k and sign s, one exists with
  // s * point[k] = 1 (rescale any nonzero common point). Normalizing a
  // coordinate of the point, rather than sum(a) = 1, keeps zero generators
  // and lines inside a cone from producing the zero point.
  std::vector<LinearEquality> base;
  for (std::size_t c = 0; c < dim; ++c) {
    QVector row(na + nb);
    for (std::size_t i = 0; i < na; ++i) row[i] = gens_a[i][c];
    for (std::size_t j = 0; j < nb; ++j) row[na + j] = -gens_b[j][c];
    base.push_back({std::move(row), 0});
  }

  for (std::size_t k = 0; k < dim; ++k) {
    for (int s : {1, -1}) {
      std::vector<LinearEquality> rows = base;
      QVector norm(na + nb);
      for (std::size_t i = 0; i < na; ++i) norm[i] = gens_a[i][k] * s;
      rows.push_back({std::move(norm), 1});
      LpResult lp = lp_feasible(rows, na + nb);
      if (!lp.feasible) continue;

      ConeWitness w;
      w.coefficients_a.assign(lp.solution.begin(), lp.solution.begin() + static_cast<std::ptrdiff_t>(na));
      w.coefficients_b.assign(lp.solution.begin() + static_cast<std::ptrdiff_t>(na), lp.solution.end());
      w.point = combine(gens_a, w.coefficients_a);
      if (w.point != combine(gens_b, w.coefficients_b) || w.point.is_zero()) {
        throw InternalError("cones_intersect_trivially: witness failed to reconstruct");
      }
      return {false, std::move(w)};
    }
  }
  return {};
}

} // namespace ghc::exact
