#include "ghc/fk/fk.hpp"

#include <algorithm>
#include <functional>

#include "ghc/error.hpp"
#include "ghc/exact/linalg.hpp"
#include "ghc/rootsys/closed_sets.hpp"

namespace ghc::fk {

namespace {

void require_closed(const RootSystem &rs, const RootSet &s, const char *what) {
  if (s.universe() != rs.size()) throw InputError(std::string(what) + ": root subset does not belong to " + rs.name());
  if (!rootsys::is_closed(rs, s)) throw InputError(std::string(what) + ": root subset is not closed");
}

void require_reductive(const RootSystem &rs, const RootSet &k, const char *what) {
  require_closed(rs, k, what);
  if (!rootsys::is_symmetric(rs, k)) throw InputError(std::string(what) + ": k roots are not symmetric");
}

std::vector<exact::QVector> vectors_of(const RootSystem &rs, const RootSet &s) {
  std::vector<exact::QVector> out;
  for (auto i : s.indices()) out.push_back(rs.root(i));
  return out;
}

// Identify one connected Dynkin diagram from its simple roots.
SimpleType identify(const RootSystem &rs, const std::vector<exact::QVector> &simple) {
  const std::size_t r = simple.size();
  if (r == 1) return {Series::A, 1};

  std::vector<std::vector<std::size_t>> adj(r);
  std::vector<std::tuple<std::size_t, std::size_t, int>> multi; // non-simple bonds
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto aij = rs.pairing(simple[i], simple[j]);
      const auto aji = rs.pairing(simple[j], simple[i]);
      const auto m = (aij * aji).num();
      if (m == 0) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      if (m > 1) multi.emplace_back(i, j, static_cast<int>(m));
    }
  }
  const auto rank = static_cast<int>(r);

  if (!multi.empty()) {
    if (multi.size() != 1) throw InternalError("recognize_type: more than one multiple bond");
    auto [u, v, m] = multi.front();
    if (m == 3) {
      if (r != 2) throw InternalError("recognize_type: triple bond outside G2");
      return {Series::G, 2};
    }
    if (r == 2) return {Series::C, 2};
    if (adj[u].size() == 2 && adj[v].size() == 2) {
      if (r != 4) throw InternalError("recognize_type: interior double bond outside F4");
      return {Series::F, 4};
    }
    const std::size_t leaf = adj[u].size() == 1 ? u : v;
    const std::size_t other = leaf == u ? v : u;
    const bool leaf_short = rs.inner(simple[leaf], simple[leaf]) < rs.inner(simple[other], simple[other]);
    return {leaf_short ? Series::B : Series::C, rank};
  }

  std::size_t branch = r;
  for (std::size_t i = 0; i < r; ++i) {
    if (adj[i].size() > 3) throw InternalError("recognize_type: node of degree > 3");
    if (adj[i].size() == 3) {
      if (branch != r) throw InternalError("recognize_type: two branch nodes");
      branch = i;
    }
  }
  if (branch == r) return {Series::A, rank};

  std::vector<int> arms;
  for (auto start : adj[branch]) {
    int len = 0;
    std::size_t prev = branch, cur = start;
    for (;;) {
      ++len;
      std::size_t next = r;
      for (auto w : adj[cur]) {
        if (w != prev) next = w;
      }
      if (next == r) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Series::D, rank};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Series::E, rank};
  throw InternalError("recognize_type: unmatched Dynkin diagram");
}

} // namespace

LeviDecomposition levi_decompose(const RootSystem &rs, const RootSet &l) {
  require_closed(rs, l, "levi_decompose");
  LeviDecomposition d{RootSet(rs.size()), RootSet(rs.size())};
  for (auto i : l.indices()) {
    if (l.contains(rs.negative(i))) d.k_roots.insert(i);
    else d.n_roots.insert(i);
  }
  return d;
}

RootSet simple_roots_of(const RootSystem &rs, const RootSet &k_roots) {
  RootSet positive(rs.size());
  for (auto i : k_roots.indices()) {
    if (rs.is_positive(i)) positive.insert(i);
  }
  RootSet simple = positive;
  const auto members = positive.indices();
  for (auto a : members) {
    for (auto b : members) {
      if (auto s = rs.sum(a, b); s && positive.contains(*s)) simple.erase(*s);
    }
  }
  return simple;
}

SingularWeightData singular_weights(const RootSystem &rs, const RootSet &k_roots,
                                    const RootSet &module_weights, RaisingSet raising) {
  require_reductive(rs, k_roots, "singular_weights");
  RootSet raise(rs.size());
  if (raising == RaisingSet::Simple) {
    raise = simple_roots_of(rs, k_roots);
  } else {
    for (auto i : k_roots.indices()) {
      if (rs.is_positive(i)) raise.insert(i);
    }
  }
  const auto raising_roots = raise.indices();
  SingularWeightData out{module_weights, RootSet(rs.size())};
  for (auto w : module_weights.indices()) {
    const bool singular = std::none_of(raising_roots.begin(), raising_roots.end(), [&](std::size_t b) {
      auto s = rs.sum(w, b);
      return s && module_weights.contains(*s);
    });
    if (singular) out.singular_weights.insert(w);
  }
  return out;
}

FiniteTypeVerdict cone_finite_type(const RootSystem &rs, const RootSet &l, RaisingSet raising) {
  if (rs.series() != Series::A) {
    throw UnsupportedTypeError("the cone criterion is stated for gl(n) and sl(n) only; got " + rs.name());
  }
  FiniteTypeVerdict v;
  v.levi = levi_decompose(rs, l);
  const RootSet g_mod_l = l.complement();
  v.singular_g_mod_l = singular_weights(rs, v.levi.k_roots, g_mod_l, raising).singular_weights;
  v.singular_n = singular_weights(rs, v.levi.k_roots, v.levi.n_roots, raising).singular_weights;
  auto a = vectors_of(rs, v.singular_g_mod_l);
  auto b = vectors_of(rs, v.singular_n);
  auto meet = exact::cones_intersect_trivially(a, b);
  v.finite_type = meet.trivial;
  v.witness = std::move(meet.witness);
  return v;
}

std::vector<SimpleType> recognize_type(const RootSystem &rs, const RootSet &subsystem) {
  require_reductive(rs, subsystem, "recognize_type");
  const auto simple_idx = simple_roots_of(rs, subsystem).indices();
  const std::size_t r = simple_idx.size();

  // Connected components of the subsystem's Dynkin diagram.
  std::vector<std::size_t> comp(r, r);
  std::size_t ncomp = 0;
  for (std::size_t s = 0; s < r; ++s) {
    if (comp[s] != r) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < r; ++j) {
        if (comp[j] == r && !rs.inner(rs.root(simple_idx[i]), rs.root(simple_idx[j])).is_zero()) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }

  std::vector<SimpleType> out;
  for (std::size_t c = 0; c < ncomp; ++c) {
    std::vector<exact::QVector> simple;
    for (std::size_t i = 0; i < r; ++i) {
      if (comp[i] == c) simple.push_back(rs.root(simple_idx[i]));
    }
    out.push_back(identify(rs, simple));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolvableVerdict solvable_finite_type(const RootSystem &rs, const RootSet &l) {
  auto levi = levi_decompose(rs, l);
  if (!levi.k_roots.empty()) throw InputError("solvable_finite_type: subalgebra is not solvable (nonzero Levi part)");
  const RootSet &n = levi.n_roots;
  SolvableVerdict v;
  v.levi_roots = (n | rootsys::negate(rs, n)).complement();
  v.is_parabolic_nilradical = rootsys::is_closed(rs, v.levi_roots) && rootsys::is_closed(rs, v.levi_roots | n);
  if (!v.is_parabolic_nilradical) return v;
  v.levi_components = recognize_type(rs, v.levi_roots);
  v.finite_type = std::all_of(v.levi_components.begin(), v.levi_components.end(), [](const SimpleType &t) {
    return t.series == Series::A || t.series == Series::C;
  });
  return v;
}

PrimalityReport is_primal(const RootSystem &rs, const RootSet &k_roots,
                          const std::vector<exact::QVector> &toral_part) {
  require_reductive(rs, k_roots, "is_primal");
  exact::require_dim(toral_part, rs.ambient_dim(), "is_primal toral part");
  const auto n = static_cast<std::size_t>(rs.rank());

  // Elements of h are recorded by their values on the simple roots, which
  // identifies h with Q^rank; a root beta then evaluates through its
  // simple-root coefficients.
  auto evaluate = [&](const exact::QVector &t) {
    exact::QVector ev(n);
    for (std::size_t j = 0; j < n; ++j) ev[j] = rs.inner(rs.root(j), t);
    return ev;
  };
  auto root_functional = [&](std::size_t i) {
    exact::QVector f(n);
    for (std::size_t j = 0; j < n; ++j) f[j] = rs.simple_coefficients(i)[j];
    return f;
  };

  std::vector<exact::QVector> torus;
  for (const auto &t : toral_part) torus.push_back(evaluate(t));
  std::vector<exact::QVector> coroots;
  for (auto i : k_roots.indices()) {
    const auto &b = rs.root(i);
    coroots.push_back(evaluate(b * (exact::Rational(2) / rs.inner(b, b))));
  }
  if (!exact::span_contains(torus, coroots)) {
    throw InputError("is_primal: toral part does not contain the coroots of k");
  }

  std::vector<exact::QVector> k_functionals;
  for (auto i : k_roots.indices()) k_functionals.push_back(root_functional(i));
  const auto annihilator = exact::nullspace(k_functionals, n);

  PrimalityReport rep;
  rep.centralizer_torus_dim = annihilator.size();
  rep.centralizer_roots = RootSet(rs.size());
  for (std::size_t g = 0; g < rs.size(); ++g) {
    const auto f = root_functional(g);
    bool kills_torus = std::all_of(torus.begin(), torus.end(), [&](const exact::QVector &t) { return f.dot(t).is_zero(); });
    if (!kills_torus) continue;
    bool commutes = true;
    for (auto b : k_roots.indices()) {
      if (rs.sum(g, b)) commutes = false;
    }
    if (commutes) rep.centralizer_roots.insert(g);
  }

  // Z(k) = torus ∩ annihilator(k_roots).
  std::vector<exact::QVector> both = torus;
  both.insert(both.end(), annihilator.begin(), annihilator.end());
  rep.center_dim = exact::rank(torus) + annihilator.size() - exact::rank(both);

  rep.primal = rep.centralizer_roots.empty() && rep.center_dim == rep.centralizer_torus_dim;
  return rep;
}

bool reductive_claim_covered(Series series, int rank) {
  if (series == Series::B && rank >= 3) return false;
  if (series == Series::F && rank == 4) return false;
  return true;
}

} // namespace ghc::fk
