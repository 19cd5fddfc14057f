#include "ghc/mathieu/mathieu.hpp"

#include <algorithm>

#include "ghc/error.hpp"
#include "ghc/rootsys/root_system.hpp"

namespace ghc::mathieu {

using rootsys::RootSystem;

std::vector<SimpleType> normalize_components(const std::vector<SimpleType> &components) {
  std::vector<SimpleType> out;
  for (auto t : components) {
    if (t.rank < 1) throw InputError("component rank must be positive");
    if ((t.series == Series::B || t.series == Series::C) && t.rank == 1) {
      out.push_back({Series::A, 1});
    } else if (t.series == Series::B && t.rank == 2) {
      out.push_back({Series::C, 2});
    } else if (t.series == Series::D && t.rank == 3) {
      out.push_back({Series::A, 3});
    } else if (t.series == Series::D && t.rank == 2) {
      out.push_back({Series::A, 1});
      out.push_back({Series::A, 1});
    } else {
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool cuspidal_exists(const std::vector<SimpleType> &components) {
  auto norm = normalize_components(components);
  return std::all_of(norm.begin(), norm.end(),
                     [](const SimpleType &t) { return t.series == Series::A || t.series == Series::C; });
}

bool cuspidal_exists(const RootSystem &rs) {
  return cuspidal_exists(fk::recognize_type(rs, rootsys::RootSet::full(rs.size())));
}

bool sp_bounded(const SpWeight &x) {
  const std::size_t n = x.dim();
  if (n == 0) return false;
  if (!std::all_of(x.begin(), x.end(), [](const Rational &v) { return v.is_half_odd(); })) return false;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (!(x[i] > x[i + 1])) return false;
  }
  return n == 1 || x[n - 2] > x[n - 1].abs();
}

bool sp_equivalent(const SpWeight &x, const SpWeight &y) {
  if (x.dim() != y.dim()) throw InputError("sp_equivalent: weights of different rank");
  if (!sp_bounded(x) || !sp_bounded(y)) throw InputError("sp_equivalent: both weights must be bounded");
  const std::size_t n = x.dim();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (x[i] != y[i]) return false;
  }
  return x[n - 1] == y[n - 1] || x[n - 1] == -y[n - 1];
}

bool sp_fiber_irreducible(const std::vector<Rational> &eta) {
  return std::none_of(eta.begin(), eta.end(), [](const Rational &v) { return v.is_half_odd(); });
}

std::int64_t sp_degree(const SpWeight &x) {
  if (!sp_bounded(x)) throw InputError("sp_degree: weight is not bounded");
  const int n = static_cast<int>(x.dim());
  if (n == 1) return 1; // o(2) is abelian
  auto d = RootSystem::build(Series::D, n, {.max_rank = std::max(n, 8)});
  QVector shifted = x;
  for (auto &v : shifted) v += Rational(1);
  const std::int64_t dim = rootsys::weyl_dim(d, shifted);
  const std::int64_t scale = std::int64_t{1} << (n - 1);
  if (dim % scale != 0) throw InternalError("sp_degree: dimension not divisible by 2^(n-1)");
  return dim / scale;
}

SlDegree sl_degree(const QVector &x) {
  const std::size_t n = x.dim() - (x.dim() > 0 ? 1 : 0);
  if (n < 1) throw InputError("sl_degree: need at least two coordinates");
  const int rank = static_cast<int>(n);
  auto a = RootSystem::build(Series::A, rank, {.max_rank = std::max(rank, 8)});
  if (rootsys::is_regular_integral(a, x)) return {true, std::nullopt};
  if (n == 1) return {false, 1};
  auto levi = RootSystem::build(Series::A, rank - 1, {.max_rank = std::max(rank, 8)});
  QVector head(n);
  for (std::size_t i = 0; i < n; ++i) head[i] = x[i];
  if (!rootsys::is_integral(levi, head)) throw InputError("sl_degree: weight is not integral for gl(n)");
  if (!rootsys::is_dominant(levi, head)) throw InputError("sl_degree: weight is not dominant for gl(n)");
  return {false, rootsys::weyl_dim(levi, head)};
}

bool operator==(const CoherentFamilyDescriptor &a, const CoherentFamilyDescriptor &b) {
  return a.rank == b.rank && sp_equivalent(a.representative, b.representative);
}

CoherentFamilyDescriptor describe_family(const SpWeight &x) {
  if (!sp_bounded(x)) throw InputError("describe_family: weight is not bounded");
  CoherentFamilyDescriptor d;
  d.rank = static_cast<int>(x.dim());
  d.representative = x;
  auto &last = d.representative[x.dim() - 1];
  last = last.abs();
  d.degree = sp_degree(d.representative);
  d.companion = {Series::D, d.rank};
  return d;
}

bool degree_constancy_check(const CoherentFamilyDescriptor &d,
                            const std::vector<CoherentFamilyDescriptor> &samples) {
  const auto expected = sp_degree(d.representative);
  if (d.degree != expected) return false;
  return std::all_of(samples.begin(), samples.end(), [&](const CoherentFamilyDescriptor &s) {
    return s.rank == d.rank && sp_bounded(s.representative) && s == d && s.degree == expected;
  });
}

} // namespace ghc::mathieu
