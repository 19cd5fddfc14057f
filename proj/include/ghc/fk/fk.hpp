#pragma once

#include <optional>
#include <vector>

#include "ghc/exact/cone.hpp"
#include "ghc/rootsys/root_set.hpp"
#include "ghc/rootsys/root_system.hpp"

namespace ghc::fk {

using rootsys::RootSet;
using rootsys::RootSystem;
using rootsys::Series;

/// l = k ⋉ n at the level of roots: k the symmetric part, n the rest.
struct LeviDecomposition {
  RootSet k_roots;
  RootSet n_roots;
};

/// Throws ghc::InputError if `l` is not closed.
LeviDecomposition levi_decompose(const RootSystem &rs, const RootSet &l);

/// Which k-raising operators the singularity test applies.
enum class RaisingSet {
  Simple,      ///< simple roots of k for the fixed positive system (default)
  AllPositive, ///< every positive root of k (equivalent; kept for cross-checks)
};

struct SingularWeightData {
  RootSet module_weights;
  RootSet singular_weights; ///< also the generators of the cone C_k(N)
};

/// Simple roots of the symmetric closed subsystem `k_roots` relative to the
/// ambient positive system.
RootSet simple_roots_of(const RootSystem &rs, const RootSet &k_roots);

/// Weights of k∩b-singular vectors in a module N whose h-weights are the
/// given roots, each of multiplicity one. A weight alpha is singular iff
/// alpha + beta is not a weight of N for every raising root beta.
/// Throws ghc::InputError unless `k_roots` is symmetric and closed.
SingularWeightData singular_weights(const RootSystem &rs, const RootSet &k_roots,
                                    const RootSet &module_weights,
                                    RaisingSet raising = RaisingSet::Simple);

struct FiniteTypeVerdict {
  bool finite_type = false;
  std::optional<exact::ConeWitness> witness;
  LeviDecomposition levi;
  RootSet singular_g_mod_l;
  RootSet singular_n;
};

/// Finite-type test for a root subalgebra l ⊇ h of gl(n)/sl(n): l is a
/// Fernando-Kac subalgebra of finite type iff C_k(g/l) ∩ C_k(n) = {0}.
/// The Z+-monoid intersection is decided through the equivalent R+-cone
/// question (see exact::cones_intersect_trivially).
/// Throws ghc::UnsupportedTypeError outside type A.
FiniteTypeVerdict cone_finite_type(const RootSystem &rs, const RootSet &l,
                                       RaisingSet raising = RaisingSet::Simple);

/// Classical simple type of a component, e.g. {Series::C, 2}.
struct SimpleType {
  Series series;
  int rank;
  friend bool operator==(const SimpleType &, const SimpleType &) = default;
  friend auto operator<=>(const SimpleType &, const SimpleType &) = default;
};

/// Types of the indecomposable components of a symmetric closed subsystem,
/// sorted. Rank-2 double bonds are reported as C2 (B2 ≅ C2), D3 shows up as
/// A3 and D2 as A1 + A1. Throws ghc::InputError for non-symmetric or
/// non-closed input.
std::vector<SimpleType> recognize_type(const RootSystem &rs, const RootSet &subsystem);

struct SolvableVerdict {
  bool finite_type = false;
  bool is_parabolic_nilradical = false;
  RootSet levi_roots; ///< m = Δ \ (n ∪ -n)
  std::vector<SimpleType> levi_components;
};

/// Solvable root subalgebra h ⊕ n: finite type iff n is the nilradical of a
/// parabolic whose Levi components are all of type A or C.
/// Throws ghc::InputError if `l` is not closed or not solvable.
SolvableVerdict solvable_finite_type(const RootSystem &rs, const RootSet &l);

struct PrimalityReport {
  bool primal = false;
  std::size_t centralizer_torus_dim = 0; ///< dim of the toral part of C(k)
  std::size_t center_dim = 0;            ///< dim Z(k)
  RootSet centralizer_roots;             ///< root spaces inside C(k)
};

/// Reductive root-data subalgebra k = toral_part ⊕ (root spaces of k_roots)
/// is primal iff C(k) = Z(k). `toral_part` is a spanning set of vectors in
/// the ambient space (elements of h via the invariant form) and must contain
/// the coroots of k_roots. Throws ghc::InputError otherwise.
PrimalityReport is_primal(const RootSystem &rs, const RootSet &k_roots,
                          const std::vector<exact::QVector> &toral_part);

/// Whether "reductive root subalgebra implies Fernando-Kac of finite type" is
/// covered by the known result: every simple type except B_n (n >= 3) and F4.
bool reductive_claim_covered(Series series, int rank);

} // namespace ghc::fk
