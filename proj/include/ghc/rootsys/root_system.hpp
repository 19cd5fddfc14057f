#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghc/exact/qvector.hpp"
#include "ghc/rootsys/root_set.hpp"

namespace ghc::rootsys {

using exact::QVector;
using exact::Rational;

enum class Series { A, B, C, D, E, F, G };

char series_char(Series s);
/// Accepts a single letter, case-insensitive. Throws ghc::InputError otherwise.
Series parse_series(std::string_view text);

/// A weight is a QVector in the ambient coordinates of its root system.
using Weight = QVector;

struct BuildOptions {
  int max_rank = 8;
};

/// A finite reduced root system together with its realization.
///
/// Classical series live in epsilon-coordinates with the standard form:
///   A_n  ambient n+1, simple roots e_i - e_{i+1}
///   B_n  simple roots e_i - e_{i+1}, e_n
///   C_n  simple roots e_i - e_{i+1}, 2 e_n
///   D_n  simple roots e_i - e_{i+1}, e_{n-1} + e_n      (n >= 2)
/// Exceptional series use simple-root coordinates (ambient = rank) with the
/// symmetrized Cartan matrix as Gram matrix, Bourbaki numbering.
///
/// Canonical root order: positive roots by height, ties broken by simple-root
/// coefficient vectors in descending lexicographic order (so the simple roots
/// come first, as alpha_1..alpha_n); then the negatives in the same order.
/// Index num_positive() + i holds -root(i).
class RootSystem {
public:
  /// Valid inputs: A>=1, B>=2, C>=2, D>=2, E6/E7/E8, F4, G2, rank <= max_rank.
  /// D2 and D3 are accepted because they occur as companion algebras.
  static RootSystem build(Series series, int rank, BuildOptions options = {});

  [[nodiscard]] Series series() const { return series_; }
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] std::size_t ambient_dim() const { return gram_.size(); }
  [[nodiscard]] std::string name() const;
  /// Connected Dynkin diagram (false only for D2).
  [[nodiscard]] bool is_simple() const;

  [[nodiscard]] std::size_t size() const { return roots_.size(); }
  [[nodiscard]] std::size_t num_positive() const { return roots_.size() / 2; }
  [[nodiscard]] const std::vector<QVector> &roots() const { return roots_; }
  [[nodiscard]] const QVector &root(std::size_t i) const { return roots_[i]; }
  [[nodiscard]] std::span<const QVector> simple_roots() const;
  [[nodiscard]] std::span<const QVector> positive_roots() const;
  [[nodiscard]] bool is_positive(std::size_t i) const { return i < num_positive(); }

  [[nodiscard]] std::size_t negative(std::size_t i) const;
  /// Index of root(i) + root(j), if that sum is a root.
  [[nodiscard]] std::optional<std::size_t> sum(std::size_t i, std::size_t j) const {
    auto s = sum_[i * roots_.size() + j];
    return s < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(s));
  }
  [[nodiscard]] std::optional<std::size_t> index_of(const QVector &v) const;

  /// Coefficients of root(i) over the simple roots.
  [[nodiscard]] const std::vector<int> &simple_coefficients(std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] int height(std::size_t i) const;

  /// a_ij = <alpha_i, alpha_j^vee>.
  [[nodiscard]] const std::vector<std::vector<int>> &cartan_matrix() const { return cartan_; }
  [[nodiscard]] const std::vector<QVector> &fundamental_weights() const { return fundamental_; }
  [[nodiscard]] const QVector &rho() const { return rho_; }

  [[nodiscard]] Rational inner(const QVector &u, const QVector &v) const;
  /// <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha).
  [[nodiscard]] Rational pairing(const QVector &lambda, const QVector &alpha) const;

  /// Sum of c_i * omega_i.
  [[nodiscard]] Weight from_fundamental(std::span<const Rational> coords) const;

  /// Coordinates of v over the simple roots, for v in their span.
  [[nodiscard]] std::optional<QVector> simple_root_coordinates(const QVector &v) const;

private:
  RootSystem() = default;
  void finish(std::vector<QVector> simple);

  Series series_ = Series::A;
  int rank_ = 0;
  std::vector<QVector> gram_;
  std::vector<QVector> simple_;
  std::vector<QVector> roots_;
  std::vector<std::vector<int>> coeffs_;
  std::map<QVector, std::size_t> index_;
  std::vector<std::int32_t> sum_;
  std::vector<std::vector<int>> cartan_;
  std::vector<QVector> fundamental_;
  std::vector<QVector> simple_gram_inverse_;
  QVector rho_;
};

/// Height of a root; throws ghc::InputError if alpha is not a root.
int height(const RootSystem &rs, const QVector &alpha);

/// height -> number of positive roots of that height.
std::map<int, int> height_distribution(const RootSystem &rs);

/// <lambda, alpha_i^vee> in Z for all simple alpha_i.
bool is_integral(const RootSystem &rs, const Weight &lambda);
/// <lambda, alpha_i^vee> >= 0 for all simple alpha_i.
bool is_dominant(const RootSystem &rs, const Weight &lambda);
/// <lambda + rho, alpha^vee> in Z \ {0} for every positive alpha.
bool is_regular_integral(const RootSystem &rs, const Weight &lambda);

/// Weyl dimension formula prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha).
/// Requires lambda dominant with integral simple coroot pairings (half-integer
/// coordinates are fine when the pairings are integral). Throws
/// ghc::InputError otherwise.
std::int64_t weyl_dim(const RootSystem &rs, const Weight &lambda);

} // namespace ghc::rootsys
