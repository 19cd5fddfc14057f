#include "ghc/shadow/shadow.hpp"

#include <set>

#include "ghc/error.hpp"
#include "ghc/exact/cone.hpp"
#include "ghc/rootsys/closed_sets.hpp"

namespace ghc::shadow {

ShadowDecomposition shadow(const RootSystem &rs, const RootSet &fk) {
  if (fk.universe() != rs.size()) throw InputError("root subset does not belong to " + rs.name());
  if (!rootsys::is_closed(rs, fk)) throw InputError("root subset is not closed");

  ShadowDecomposition sd{RootSet(rs.size()), RootSet(rs.size()), RootSet(rs.size()),
                         RootSet(rs.size()), fk.complement()};
  std::vector<exact::QVector> gens;
  for (auto i : sd.gamma.indices()) gens.push_back(rs.root(i));

  // A root's class needs the cone bit of alpha and of -alpha.
  std::vector<bool> in_cone(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    in_cone[i] = sd.gamma.contains(i) || exact::cone_member(rs.root(i), gens).member;
  }
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const bool pos = in_cone[i];
    const bool neg = in_cone[rs.negative(i)];
    if (pos && neg) sd.infinite.insert(i);
    else if (!pos && !neg) sd.finite.insert(i);
    else if (neg) sd.plus.insert(i);
    else sd.minus.insert(i);
  }
  return sd;
}

RootSet parabolic_pM(const ShadowDecomposition &sd) { return sd.infinite | sd.finite | sd.plus; }

RootSet fernando_fk(const ShadowDecomposition &sd) { return sd.finite | sd.plus; }

std::vector<Weight> support_shape(const RootSystem &rs, const ShadowDecomposition &sd,
                                  const std::vector<Weight> &base_points, int truncation_radius) {
  if (truncation_radius < 0) throw InputError("truncation radius must be nonnegative");
  exact::require_dim(base_points, rs.ambient_dim(), "support_shape");
  const auto gens = sd.gamma.indices();

  // Layered by coefficient sum: layer r holds all Gamma-sums with sum c_i = r.
  std::set<exact::QVector> layer{exact::QVector(rs.ambient_dim())};
  std::set<exact::QVector> offsets = layer;
  for (int r = 1; r <= truncation_radius; ++r) {
    std::set<exact::QVector> next;
    for (const auto &v : layer) {
      for (auto g : gens) next.insert(v + rs.root(g));
    }
    offsets.insert(next.begin(), next.end());
    layer = std::move(next);
  }

  std::set<Weight> out;
  for (const auto &b : base_points) {
    for (const auto &o : offsets) out.insert(b + o);
  }
  return {out.begin(), out.end()};
}

} // namespace ghc::shadow
