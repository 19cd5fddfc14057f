#include "ghc/rootsys/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "ghc/error.hpp"
#include "ghc/exact/linalg.hpp"

namespace ghc::rootsys {

namespace {

QVector unit(std::size_t dim, std::size_t i, Rational scale = 1) {
  QVector v(dim);
  v[i] = scale;
  return v;
}

std::vector<QVector> identity_gram(std::size_t dim) {
  std::vector<QVector> g;
  for (std::size_t i = 0; i < dim; ++i) g.push_back(unit(dim, i));
  return g;
}

// Exceptional Dynkin data as (diagonal lengths, bonds (i, j, (alpha_i, alpha_j))).
struct DiagramSpec {
  std::vector<int> lengths;
  std::vector<std::tuple<int, int, int>> bonds;
};

DiagramSpec exceptional_spec(Series s, int rank) {
  switch (s) {
  case Series::G:
    return {{2, 6}, {{0, 1, -3}}};
  case Series::F:
    return {{4, 4, 2, 2}, {{0, 1, -2}, {1, 2, -2}, {2, 3, -1}}};
  case Series::E: {
    DiagramSpec d{std::vector<int>(static_cast<std::size_t>(rank), 2), {{0, 2, -1}, {1, 3, -1}}};
    for (int i = 2; i + 1 < rank; ++i) d.bonds.emplace_back(i, i + 1, -1);
    return d;
  }
  default:
    throw InternalError("exceptional_spec: classical series");
  }
}

void validate(Series s, int rank, const BuildOptions &opt) {
  if (rank < 1) throw InputError("rank must be positive");
  if (rank > opt.max_rank) {
    throw InputError("rank " + std::to_string(rank) + " exceeds the configured cap " +
                     std::to_string(opt.max_rank));
  }
  bool ok = false;
  switch (s) {
  case Series::A: ok = rank >= 1; break;
  case Series::B: ok = rank >= 2; break;
  case Series::C: ok = rank >= 2; break;
  case Series::D: ok = rank >= 2; break;
  case Series::E: ok = rank >= 6 && rank <= 8; break;
  case Series::F: ok = rank == 4; break;
  case Series::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw InputError(std::string("invalid root system type ") + series_char(s) + std::to_string(rank));
  }
}

} // namespace

char series_char(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

Series parse_series(std::string_view text) {
  if (text.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Series>(c - 'A');
  }
  throw InputError("unknown series \"" + std::string(text) + "\"");
}

RootSystem RootSystem::build(Series series, int rank, BuildOptions options) {
  validate(series, rank, options);
  RootSystem rs;
  rs.series_ = series;
  rs.rank_ = rank;
  const auto n = static_cast<std::size_t>(rank);
  std::vector<QVector> simple;

  switch (series) {
  case Series::A:
  case Series::B:
  case Series::C:
  case Series::D: {
    const std::size_t dim = series == Series::A ? n + 1 : n;
    rs.gram_ = identity_gram(dim);
    for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(unit(dim, i) - unit(dim, i + 1));
    if (series == Series::A) simple.push_back(unit(dim, n - 1) - unit(dim, n));
    if (series == Series::B) simple.push_back(unit(dim, n - 1));
    if (series == Series::C) simple.push_back(unit(dim, n - 1, 2));
    if (series == Series::D) simple.push_back(unit(dim, n - 2) + unit(dim, n - 1));
    break;
  }
  case Series::E:
  case Series::F:
  case Series::G: {
    DiagramSpec d = exceptional_spec(series, rank);
    rs.gram_.assign(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i) rs.gram_[i][i] = d.lengths[i];
    for (auto [i, j, v] : d.bonds) {
      rs.gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      rs.gram_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
    for (std::size_t i = 0; i < n; ++i) simple.push_back(unit(n, i));
    break;
  }
  }
  rs.finish(std::move(simple));
  return rs;
}

void RootSystem::finish(std::vector<QVector> simple) {
  const auto n = static_cast<std::size_t>(rank_);
  simple_ = simple;

  // Reflection closure of the simple roots.
  std::set<QVector> found(simple.begin(), simple.end());
  std::deque<QVector> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    QVector beta = queue.front();
    queue.pop_front();
    for (const auto &a : simple) {
      QVector r = beta - a * pairing(beta, a);
      if (found.insert(r).second) queue.push_back(std::move(r));
    }
  }

  std::vector<QVector> sgram(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sgram[i][j] = inner(simple[i], simple[j]);
  }
  simple_gram_inverse_ = exact::inverse(sgram);

  struct Entry {
    QVector root;
    std::vector<int> coeffs;
    int height;
  };
  std::vector<Entry> positives;
  for (const auto &beta : found) {
    auto c = simple_root_coordinates(beta);
    if (!c) throw InternalError("root outside the span of the simple roots");
    std::vector<int> ci(n);
    int h = 0;
    bool nonneg = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*c)[i].is_integer()) throw InternalError("non-integral root coefficients");
      ci[i] = static_cast<int>((*c)[i].num());
      h += ci[i];
      nonneg = nonneg && ci[i] >= 0;
    }
    if (nonneg) positives.push_back({beta, ci, h});
  }
  if (positives.size() * 2 != found.size()) throw InternalError("root set is not symmetric");
  std::sort(positives.begin(), positives.end(), [](const Entry &a, const Entry &b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs > b.coeffs;
  });

  const std::size_t npos = positives.size();
  roots_.clear();
  coeffs_.clear();
  for (const auto &e : positives) {
    roots_.push_back(e.root);
    coeffs_.push_back(e.coeffs);
  }
  for (const auto &e : positives) {
    roots_.push_back(-e.root);
    std::vector<int> neg = e.coeffs;
    for (auto &x : neg) x = -x;
    coeffs_.push_back(neg);
  }
  index_.clear();
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);

  const std::size_t total = roots_.size();
  sum_.assign(total * total, -1);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      auto it = index_.find(roots_[i] + roots_[j]);
      if (it != index_.end()) sum_[i * total + j] = static_cast<std::int32_t>(it->second);
    }
  }

  cartan_.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = pairing(roots_[i], roots_[j]);
      cartan_[i][j] = static_cast<int>(a.num());
    }
  }

  // omega_i = sum_k x_k alpha_k with sum_k x_k a_kj = delta_ij.
  std::vector<QVector> m(n, QVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m[j][k] = cartan_[k][j];
  }
  auto minv = exact::inverse(m);
  fundamental_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    QVector w(ambient_dim());
    for (std::size_t k = 0; k < n; ++k) w += roots_[k] * minv[k][i];
    fundamental_.push_back(std::move(w));
  }

  rho_ = QVector(ambient_dim());
  for (std::size_t i = 0; i < npos; ++i) rho_ += roots_[i];
  rho_ *= Rational(1, 2);
}

std::string RootSystem::name() const { return series_char(series_) + std::to_string(rank_); }

bool RootSystem::is_simple() const { return !(series_ == Series::D && rank_ == 2); }

std::span<const QVector> RootSystem::simple_roots() const {
  return {roots_.data(), static_cast<std::size_t>(rank_)};
}

std::span<const QVector> RootSystem::positive_roots() const { return {roots_.data(), num_positive()}; }

std::size_t RootSystem::negative(std::size_t i) const {
  return i < num_positive() ? i + num_positive() : i - num_positive();
}

std::optional<std::size_t> RootSystem::index_of(const QVector &v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::height(std::size_t i) const {
  int h = 0;
  for (int c : coeffs_[i]) h += c;
  return h;
}

Rational RootSystem::inner(const QVector &u, const QVector &v) const {
  if (u.dim() != ambient_dim() || v.dim() != ambient_dim()) {
    throw InputError("weight has dimension " + std::to_string(u.dim() == ambient_dim() ? v.dim() : u.dim()) +
                     ", expected " + std::to_string(ambient_dim()) + " for " + name());
  }
  Rational s;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i].is_zero()) continue;
    s += u[i] * gram_[i].dot(v);
  }
  return s;
}

Rational RootSystem::pairing(const QVector &lambda, const QVector &alpha) const {
  return Rational(2) * inner(lambda, alpha) / inner(alpha, alpha);
}

Weight RootSystem::from_fundamental(std::span<const Rational> coords) const {
  if (coords.size() != fundamental_.size()) throw InputError("expected one coordinate per fundamental weight");
  QVector w(ambient_dim());
  for (std::size_t i = 0; i < coords.size(); ++i) w += fundamental_[i] * coords[i];
  return w;
}

std::optional<QVector> RootSystem::simple_root_coordinates(const QVector &v) const {
  const auto n = static_cast<std::size_t>(rank_);
  QVector rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs[j] = inner(v, simple_[j]);
  QVector c = exact::mat_vec(simple_gram_inverse_, rhs);
  QVector back(ambient_dim());
  for (std::size_t j = 0; j < n; ++j) back += simple_[j] * c[j];
  if (back != v) return std::nullopt;
  return c;
}

int height(const RootSystem &rs, const QVector &alpha) {
  auto i = rs.index_of(alpha);
  if (!i) throw InputError("not a root of " + rs.name());
  return rs.height(*i);
}

std::map<int, int> height_distribution(const RootSystem &rs) {
  std::map<int, int> out;
  for (std::size_t i = 0; i < rs.num_positive(); ++i) ++out[rs.height(i)];
  return out;
}

bool is_integral(const RootSystem &rs, const Weight &lambda) {
  return std::all_of(rs.simple_roots().begin(), rs.simple_roots().end(),
                     [&](const QVector &a) { return rs.pairing(lambda, a).is_integer(); });
}

bool is_dominant(const RootSystem &rs, const Weight &lambda) {
  return std::all_of(rs.simple_roots().begin(), rs.simple_roots().end(),
                     [&](const QVector &a) { return rs.pairing(lambda, a) >= 0; });
}

bool is_regular_integral(const RootSystem &rs, const Weight &lambda) {
  const QVector shifted = lambda + rs.rho();
  return std::all_of(rs.positive_roots().begin(), rs.positive_roots().end(), [&](const QVector &a) {
    Rational p = rs.pairing(shifted, a);
    return p.is_integer() && !p.is_zero();
  });
}

std::int64_t weyl_dim(const RootSystem &rs, const Weight &lambda) {
  if (!is_integral(rs, lambda)) throw InputError("weyl_dim: weight is not integral for " + rs.name());
  if (!is_dominant(rs, lambda)) throw InputError("weyl_dim: weight is not dominant for " + rs.name());
  const QVector shifted = lambda + rs.rho();
  Rational d = 1;
  for (const auto &a : rs.positive_roots()) d *= rs.inner(shifted, a) / rs.inner(rs.rho(), a);
  if (!d.is_integer() || d < 1) throw InternalError("weyl_dim: non-integral dimension");
  return d.num();
}

} // namespace ghc::rootsys
