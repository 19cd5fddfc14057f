#include "ghc/kernels/census.hpp"

#include <algorithm>
#include <exception>
#include <unordered_set>

#include "ghc/error.hpp"
#include "ghc/rootsys/closed_sets.hpp"

namespace ghc::kernels {

namespace {

std::vector<rootsys::RootSet> candidates(const rootsys::RootSystem &rs, const CensusOptions &options) {
  if (rs.series() != rootsys::Series::A) throw UnsupportedTypeError("census is available for type A only");
  if (rs.rank() > options.max_rank) {
    throw InputError("census rank " + std::to_string(rs.rank()) + " exceeds the cap " + std::to_string(options.max_rank));
  }
  auto all = rootsys::enumerate_closed_subsets(rs);
  if (!options.dedup) return all;
  const auto group = rootsys::weyl_group_permutations(rs);
  std::unordered_set<rootsys::RootSet, rootsys::RootSetHash> seen;
  std::vector<rootsys::RootSet> reps;
  for (const auto &s : all) {
    auto rep = rootsys::orbit_representative(group, s);
    if (seen.insert(rep).second) reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

CensusRow classify(const rootsys::RootSystem &rs, const rootsys::RootSet &l) {
  auto v = fk::cone_finite_type(rs, l);
  return {l, std::move(v.levi), v.finite_type, std::move(v.witness), std::move(v.singular_g_mod_l),
          std::move(v.singular_n)};
}

} // namespace

std::vector<CensusRow> census_serial(const rootsys::RootSystem &rs, const CensusOptions &options) {
  std::vector<CensusRow> rows;
  for (const auto &l : candidates(rs, options)) rows.push_back(classify(rs, l));
  return rows;
}

std::vector<CensusRow> census_parallel(const rootsys::RootSystem &rs, const CensusOptions &options) {
  const auto subsets = candidates(rs, options);
  std::vector<CensusRow> rows(subsets.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = classify(rs, subsets[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(ghc_census_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::map<std::int64_t, std::int64_t> ktype_series_serial(const principal::PrincipalData &pd,
                                                         const rootsys::Weight &lambda, std::int64_t max_m) {
  return principal::ktype_series(pd, lambda, max_m);
}

std::map<std::int64_t, std::int64_t> ktype_series_parallel(const principal::PrincipalData &pd,
                                                           const rootsys::Weight &lambda, std::int64_t max_m) {
  if (max_m < 0) throw InputError("max_m must be nonnegative");
  if (rootsys::is_integral(pd.rs, lambda)) throw InputError("lambda must be non-integral");
  std::vector<std::int64_t> values(static_cast<std::size_t>(max_m + 1));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t m = 0; m <= max_m; ++m) {
    try {
      values[static_cast<std::size_t>(m)] = principal::a1_multiplicity(pd, m, lambda);
    } catch (...) {
#pragma omp critical(ghc_series_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t m = 0; m <= max_m; ++m) out[m] = values[static_cast<std::size_t>(m)];
  return out;
}

} // namespace ghc::kernels
