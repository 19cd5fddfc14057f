#pragma once

#include <vector>

#include "ghc/rootsys/root_set.hpp"
#include "ghc/rootsys/root_system.hpp"

namespace ghc::shadow {

using rootsys::RootSet;
using rootsys::RootSystem;
using rootsys::Weight;

/// Four-way partition of the roots induced by a Fernando-Kac root subalgebra.
///
/// With Gamma the roots outside the subalgebra and K its R+ cone:
///   infinite (I): alpha in K and -alpha in K
///   finite   (F): neither
///   plus        : -alpha in K only
///   minus       : alpha in K only
struct ShadowDecomposition {
  RootSet infinite;
  RootSet finite;
  RootSet plus;
  RootSet minus;
  RootSet gamma; ///< generators of Gamma: the complement of the input subalgebra
};

/// Classify each root by two cone-membership queries against gamma.
/// Throws ghc::InputError if `fk` is not closed.
ShadowDecomposition shadow(const RootSystem &rs, const RootSet &fk);

/// I ∪ F ∪ plus, the parabolic p_M.
RootSet parabolic_pM(const ShadowDecomposition &sd);

/// F ∪ plus, the Fernando-Kac subalgebra of a finite-type weight module with this shadow.
RootSet fernando_fk(const ShadowDecomposition &sd);

/// {b + sum c_i gamma_i : b in base_points, c_i in Z+, sum c_i <= radius},
/// deduplicated and sorted.
std::vector<Weight> support_shape(const RootSystem &rs, const ShadowDecomposition &sd,
                                  const std::vector<Weight> &base_points, int truncation_radius);

} // namespace ghc::shadow
