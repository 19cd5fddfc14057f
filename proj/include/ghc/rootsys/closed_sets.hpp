#pragma once

#include <cstddef>
#include <vector>

#include "ghc/rootsys/root_set.hpp"
#include "ghc/rootsys/root_system.hpp"

namespace ghc::rootsys {

/// alpha, beta in s and alpha + beta a root imply alpha + beta in s.
bool is_closed(const RootSystem &rs, const RootSet &s);
/// alpha in s implies -alpha in s.
bool is_symmetric(const RootSystem &rs, const RootSet &s);
/// -s.
RootSet negate(const RootSystem &rs, const RootSet &s);
/// Smallest closed superset.
RootSet closure(const RootSystem &rs, const RootSet &s);
/// s closed and s ∪ -s = Δ.
bool is_parabolic(const RootSystem &rs, const RootSet &s);

/// Every closed subset of Δ (the empty set included), in RootSet canonical
/// order. Generated by closing single-root extensions breadth first.
std::vector<RootSet> enumerate_closed_subsets(const RootSystem &rs);

/// The Weyl group acting on root indices; element w maps root i to w[i].
std::vector<std::vector<std::size_t>> weyl_group_permutations(const RootSystem &rs);

RootSet apply_permutation(const std::vector<std::size_t> &perm, const RootSet &s);

/// Canonically smallest image of s under the given permutation group.
RootSet orbit_representative(const std::vector<std::vector<std::size_t>> &group, const RootSet &s);

} // namespace ghc::rootsys
