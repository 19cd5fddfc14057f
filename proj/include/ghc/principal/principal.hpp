#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ghc/exact/qvector.hpp"
#include "ghc/rootsys/root_system.hpp"

namespace ghc::principal {

using exact::QVector;
using exact::Rational;
using rootsys::RootSystem;
using rootsys::Weight;

/// part -> multiplicity; the t-character of a graded piece of n-bar.
using Multiset = std::map<std::int64_t, std::int64_t>;

/// Spectral data of the principal sl(2) = <e, h, f> in g.
struct PrincipalData {
  RootSystem rs;
  QVector h_element;                ///< ambient vector with alpha_i(h) = 2
  std::vector<int> exponents;       ///< ascending
  Multiset nbar_multiset;           ///< eigenvalues of -ad h on n-bar
  Multiset nbar_kperp_multiset;     ///< same with one copy of 2 removed
};

/// The h of the principal triple: alpha(h) = 2 ht(alpha) for every root.
/// Returned as a vector of the ambient space via the invariant form.
QVector principal_h(const RootSystem &rs);

/// Exponents of a simple root system, read off as the dual partition of the
/// height distribution of the positive roots.
std::vector<int> exponents(const RootSystem &rs);

/// Throws ghc::InputError if rs is not simple or has rank < 2.
PrincipalData principal_data(const RootSystem &rs);

/// Coefficient of q^target in prod_p (1 - q^p)^{-mult(p)}: 0 for negative or
/// non-integral targets. Throws ghc::InputError on a non-positive part.
std::int64_t partition_P(const Multiset &parts, const Rational &target);

/// dim Hom_k(W(m rho_k), A^1(lambda)) through the partition function of
/// n-bar ∩ k-perp. Throws ghc::InputError for integral lambda or m < 0.
std::int64_t a1_multiplicity(const PrincipalData &pd, std::int64_t m, const Weight &lambda);

/// sum_i (-1)^i dim Hom_t(W(m) ⊗ Λ^i(k/t), M(lambda)) with M(lambda) the Verma
/// module, computed from the partition function of the full n-bar.
std::int64_t euler_rhs(const PrincipalData &pd, std::int64_t m, const Weight &lambda);

/// Smallest m with W(m rho_k) in A^1(lambda): lambda(h) - 2.
/// Throws ghc::InputError unless lambda(h) - 2 is a nonnegative integer and
/// lambda is not integral.
std::int64_t minimal_ktype(const PrincipalData &pd, const Weight &lambda);

/// dim k - dim t: R^i Gamma vanishes above this degree.
int vanishing_degree(const PrincipalData &pd);

/// lambda(h).
Rational lambda_h(const PrincipalData &pd, const Weight &lambda);

/// A non-integral weight with the prescribed value at h (rank >= 2): the first
/// fundamental coordinate is 1/3 and the second absorbs the rest.
Weight nonintegral_weight_with_h(const PrincipalData &pd, const Rational &value);

/// Multiplicities for m = 0..max_m.
std::map<std::int64_t, std::int64_t> ktype_series(const PrincipalData &pd, const Weight &lambda, std::int64_t max_m);

} // namespace ghc::principal
