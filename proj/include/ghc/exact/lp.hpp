#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "ghc/exact/qvector.hpp"

namespace ghc::exact {

/// One row `coeffs · x = rhs` of an equality system.
struct LinearEquality {
  QVector coeffs;
  Rational rhs;
};

struct LpResult {
  bool feasible = false;
  QVector solution; ///< valid only when feasible
};

/// Decide {x in Q^n : x >= 0, every equality holds}.
///
/// Phase-one simplex on an exact tableau with Bland's smallest-index rule for
/// both the entering and the leaving variable, so it terminates and the
/// returned vertex depends only on the input. Throws ghc::InputError if an
/// equality's coefficient vector is not of length `num_vars`.
LpResult lp_feasible(std::span<const LinearEquality> equalities, std::size_t num_vars);

} // namespace ghc::exact
