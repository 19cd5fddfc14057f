#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ghc/exact/qvector.hpp"
#include "ghc/fk/fk.hpp"

namespace ghc::mathieu {

using exact::QVector;
using exact::Rational;
using fk::SimpleType;
using rootsys::Series;

/// x = sum x_i e_i for sp(2n), in the e-coordinates of C_n.
using SpWeight = QVector;

/// Normalizes low-rank coincidences (B1, C1 -> A1; B2 -> C2; D3 -> A3;
/// D2 -> A1 + A1) and sorts.
std::vector<SimpleType> normalize_components(const std::vector<SimpleType> &components);

/// A reductive algebra with these simple components has cuspidal modules iff
/// every component is of type A or C (after normalization).
bool cuspidal_exists(const std::vector<SimpleType> &components);
bool cuspidal_exists(const rootsys::RootSystem &rs);

/// Bounded multiplicity for sp(2n): every x_i in Z + 1/2 and
/// x_1 > x_2 > ... > x_{n-1} > |x_n|.
bool sp_bounded(const SpWeight &x);

/// Same coherent family: equal up to the sign of the last entry.
/// Throws ghc::InputError unless both weights are bounded and of equal length.
bool sp_equivalent(const SpWeight &x, const SpWeight &y);

/// A fiber of the coherent family is irreducible iff no eta_i lies in Z + 1/2.
bool sp_fiber_irreducible(const std::vector<Rational> &eta);

/// Degree 2^{1-n} dim L(x + e) of the o(2n) companion module, e = (1, ..., 1).
/// Throws ghc::InputError unless sp_bounded(x).
std::int64_t sp_degree(const SpWeight &x);

/// Result of the partial sl(n+1) degree formula.
struct SlDegree {
  bool regular_integral = false;   ///< formula not available in this case
  std::optional<std::int64_t> degree;
};

/// x in the (n+1) e-coordinates of sl(n+1); the companion gl(n) acts on the
/// first n coordinates. In the regular integral case the result carries no
/// degree. Otherwise x must be dominant integral for gl(n) (InputError if not)
/// and the degree is the gl(n) Weyl dimension.
/// Bounded multiplicity of x is a caller-side assumption.
SlDegree sl_degree(const QVector &x);

/// One coherent family of bounded sp(2n) modules.
struct CoherentFamilyDescriptor {
  int rank = 0;
  SpWeight representative; ///< canonical: last entry made nonnegative
  std::int64_t degree = 0;
  SimpleType companion{Series::D, 0};

  /// Same family (representatives equivalent); the stored degree is not compared.
  friend bool operator==(const CoherentFamilyDescriptor &a, const CoherentFamilyDescriptor &b);
};

/// Throws ghc::InputError unless sp_bounded(x).
CoherentFamilyDescriptor describe_family(const SpWeight &x);

/// True iff every sample names the same family as `d` and carries the degree
/// recomputed from `d`'s representative.
bool degree_constancy_check(const CoherentFamilyDescriptor &d,
                            const std::vector<CoherentFamilyDescriptor> &samples);

} // namespace ghc::mathieu
