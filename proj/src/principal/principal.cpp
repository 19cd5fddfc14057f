#include "ghc/principal/principal.hpp"

#include "ghc/error.hpp"
#include "ghc/exact/linalg.hpp"

namespace ghc::principal {

QVector principal_h(const RootSystem &rs) {
  // (alpha_i, h) = 2 for each simple root, h in the span of the simple roots.
  exact::QMatrix gram;
  for (const auto &a : rs.simple_roots()) {
    exact::QVector row(static_cast<std::size_t>(rs.rank()));
    for (std::size_t j = 0; j < row.dim(); ++j) row[j] = rs.inner(a, rs.simple_roots()[j]);
    gram.push_back(row);
  }
  QVector twos(static_cast<std::size_t>(rs.rank()));
  for (auto &v : twos) v = Rational(2);
  auto c = exact::solve(gram, twos, twos.dim());
  if (!c) throw InternalError("principal_h: singular Gram matrix");
  QVector h(rs.ambient_dim());
  for (std::size_t j = 0; j < c->dim(); ++j) h += rs.simple_roots()[j] * (*c)[j];
  return h;
}

std::vector<int> exponents(const RootSystem &rs) {
  const auto dist = rootsys::height_distribution(rs);
  std::vector<int> out;
  for (auto [ht, count] : dist) {
    auto next = dist.find(ht + 1);
    const int drop = count - (next == dist.end() ? 0 : next->second);
    for (int i = 0; i < drop; ++i) out.push_back(ht);
  }
  return out;
}

PrincipalData principal_data(const RootSystem &rs) {
  if (rs.rank() < 2) throw InputError("principal data needs rank >= 2");
  if (!rs.is_simple()) throw InputError("principal data needs a simple root system");
  PrincipalData pd{rs, principal_h(rs), exponents(rs), {}, {}};
  for (std::size_t i = 0; i < rs.num_positive(); ++i) ++pd.nbar_multiset[2 * rs.height(i)];
  pd.nbar_kperp_multiset = pd.nbar_multiset;
  if (--pd.nbar_kperp_multiset[2] == 0) pd.nbar_kperp_multiset.erase(2);
  return pd;
}

std::int64_t partition_P(const Multiset &parts, const Rational &target) {
  for (auto [p, mult] : parts) {
    if (p <= 0) throw InputError("partition_P: parts must be positive");
    if (mult < 0) throw InputError("partition_P: multiplicities must be nonnegative");
  }
  if (!target.is_integer() || target.sign() < 0) return 0;
  const auto t = static_cast<std::size_t>(target.num());
  std::vector<std::int64_t> ways(t + 1, 0);
  ways[0] = 1;
  for (auto [p, mult] : parts) {
    const auto step = static_cast<std::size_t>(p);
    for (std::int64_t copy = 0; copy < mult; ++copy) {
      for (std::size_t v = step; v <= t; ++v) {
        if (__builtin_add_overflow(ways[v], ways[v - step], &ways[v])) {
          throw std::overflow_error("partition_P: count overflows int64");
        }
      }
    }
  }
  return ways[t];
}

Rational lambda_h(const PrincipalData &pd, const Weight &lambda) {
  exact::require_dim(std::span<const Weight>(&lambda, 1), pd.rs.ambient_dim(), "lambda");
  return pd.rs.inner(lambda, pd.h_element);
}

namespace {

Rational checked_lambda_h(const PrincipalData &pd, const Weight &lambda) {
  const Rational lh = lambda_h(pd, lambda);
  if (rootsys::is_integral(pd.rs, lambda)) throw InputError("lambda must be non-integral");
  return lh;
}

} // namespace

std::int64_t a1_multiplicity(const PrincipalData &pd, std::int64_t m, const Weight &lambda) {
  if (m < 0) throw InputError("m must be nonnegative");
  const Rational lh = checked_lambda_h(pd, lambda);
  const auto &kp = pd.nbar_kperp_multiset;
  return partition_P(kp, Rational(m) - lh + Rational(2)) - partition_P(kp, Rational(-m) - lh);
}

std::int64_t euler_rhs(const PrincipalData &pd, std::int64_t m, const Weight &lambda) {
  if (m < 0) throw InputError("m must be nonnegative");
  const Rational lh = lambda_h(pd, lambda);
  const auto &full = pd.nbar_multiset;
  // t-weights of the Verma module are lambda(h) plus sums of n-bar eigenvalues.
  // W(m) ⊗ Λ^i(k/t) has weights v (i = 0, 2) and v ± 2 (i = 1).
  auto verma = [&](const Rational &v) { return partition_P(full, v - lh); };
  std::int64_t total = 0;
  for (std::int64_t v = -m; v <= m; v += 2) {
    const Rational w(v);
    total += 2 * verma(w) - verma(w + Rational(2)) - verma(w - Rational(2));
  }
  return total;
}

std::int64_t minimal_ktype(const PrincipalData &pd, const Weight &lambda) {
  const Rational lh = checked_lambda_h(pd, lambda);
  const Rational m = lh - Rational(2);
  if (!m.is_integer() || m.sign() < 0) throw InputError("lambda(h) - 2 must be a nonnegative integer");
  return m.num();
}

int vanishing_degree(const PrincipalData &) { return 3 - 1; }

Weight nonintegral_weight_with_h(const PrincipalData &pd, const Rational &value) {
  // lambda(h) = 2 (lambda, rho^vee) = sum_i p_i (omega_i, h) with (omega_i, h) = <omega_i, h>.
  const auto &fw = pd.rs.fundamental_weights();
  const Rational h0 = pd.rs.inner(fw[0], pd.h_element);
  const Rational h1 = pd.rs.inner(fw[1], pd.h_element);
  std::vector<Rational> coords(fw.size());
  coords[0] = Rational(1, 3);
  coords[1] = (value - coords[0] * h0) / h1;
  return pd.rs.from_fundamental(coords);
}

std::map<std::int64_t, std::int64_t> ktype_series(const PrincipalData &pd, const Weight &lambda, std::int64_t max_m) {
  if (max_m < 0) throw InputError("max_m must be nonnegative");
  checked_lambda_h(pd, lambda);
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t m = 0; m <= max_m; ++m) out[m] = a1_multiplicity(pd, m, lambda);
  return out;
}

} // namespace ghc::principal
