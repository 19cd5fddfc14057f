#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ghc/exact/qvector.hpp"

namespace ghc::exact {

struct ConeMembership {
  bool member = false;
  std::vector<Rational> coefficients; ///< nonnegative, one per generator, when member
};

/// Certificate that two cones share a nonzero point:
/// point = sum coefficients_a[i] * gens_a[i] = sum coefficients_b[j] * gens_b[j].
struct ConeWitness {
  std::vector<Rational> coefficients_a;
  std::vector<Rational> coefficients_b;
  QVector point;
};

struct ConeIntersection {
  bool trivial = true;
  std::optional<ConeWitness> witness; ///< present iff !trivial
};

/// Is v a nonnegative rational combination of the generators?
/// The zero vector is always a member (empty combination).
ConeMembership cone_member(const QVector &v, std::span<const QVector> generators);

/// Do the cones spanned by gens_a and gens_b meet only in 0?
///
/// This also decides the Z+-monoid version of the question for integral
/// generators: if p != 0 lies in both rational cones, write
/// p = sum a_i g_i = sum b_j h_j with rational a, b >= 0 and multiply by a
/// common denominator D of all a_i and b_j. Then D*p is a nonzero point of
/// both monoids. The converse is immediate.
ConeIntersection cones_intersect_trivially(std::span<const QVector> gens_a,
                                           std::span<const QVector> gens_b);

/// Evaluates sum coefficients[i] * generators[i].
QVector combine(std::span<const QVector> generators, std::span<const Rational> coefficients);

} // namespace ghc::exact
