#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ghc/fk/fk.hpp"
#include "ghc/principal/principal.hpp"

namespace ghc::kernels {

struct CensusOptions {
  bool dedup = false; ///< keep one representative per Weyl-group orbit
  int max_rank = 4;
};

struct CensusRow {
  rootsys::RootSet subalgebra;
  fk::LeviDecomposition levi;
  bool finite_type = false;
  std::optional<exact::ConeWitness> witness;
  rootsys::RootSet singular_g_mod_l;
  rootsys::RootSet singular_n;
};

/// Every closed root subset of a type-A system (each a subalgebra containing
/// the Cartan), classified by the cone criterion, in canonical order.
/// Throws ghc::InputError above the rank cap and ghc::UnsupportedTypeError
/// outside type A.
std::vector<CensusRow> census_serial(const rootsys::RootSystem &rs, const CensusOptions &options = {});

/// Same rows, classified concurrently with OpenMP.
std::vector<CensusRow> census_parallel(const rootsys::RootSystem &rs, const CensusOptions &options = {});

/// m -> dim Hom_k(W(m rho_k), A^1(lambda)) for 0 <= m <= max_m.
std::map<std::int64_t, std::int64_t> ktype_series_serial(const principal::PrincipalData &pd,
                                                         const rootsys::Weight &lambda, std::int64_t max_m);
std::map<std::int64_t, std::int64_t> ktype_series_parallel(const principal::PrincipalData &pd,
                                                           const rootsys::Weight &lambda, std::int64_t max_m);

} // namespace ghc::kernels
