#include <doctest.h>

#include <tuple>

#include "ghc/error.hpp"
#include "ghc/rootsys/closed_sets.hpp"
#include "ghc/rootsys/root_system.hpp"

using namespace ghc::rootsys;
using ghc::exact::QVector;
using ghc::exact::Rational;

namespace {

const std::vector<std::tuple<Series, int, std::size_t>> &classical_counts() {
  static const std::vector<std::tuple<Series, int, std::size_t>> table = [] {
    std::vector<std::tuple<Series, int, std::size_t>> t;
    for (std::size_t n = 1; n <= 8; ++n) t.emplace_back(Series::A, static_cast<int>(n), n * (n + 1));
    for (std::size_t n = 2; n <= 8; ++n) {
      t.emplace_back(Series::B, static_cast<int>(n), 2 * n * n);
      t.emplace_back(Series::C, static_cast<int>(n), 2 * n * n);
    }
    for (std::size_t n = 4; n <= 8; ++n) t.emplace_back(Series::D, static_cast<int>(n), 2 * n * (n - 1));
    t.emplace_back(Series::G, 2, 12);
    t.emplace_back(Series::F, 4, 48);
    t.emplace_back(Series::E, 6, 72);
    t.emplace_back(Series::E, 7, 126);
    t.emplace_back(Series::E, 8, 240);
    return t;
  }();
  return table;
}

} // namespace

TEST_CASE("build: small examples") {
  CHECK(RootSystem::build(Series::A, 1).size() == 2);
  auto a2 = RootSystem::build(Series::A, 2);
  CHECK(a2.size() == 6);
  CHECK(a2.num_positive() == 3);
  CHECK(a2.ambient_dim() == 3);

  auto c2 = RootSystem::build(Series::C, 2);
  REQUIRE(c2.size() == 8);
  std::vector<QVector> pos(c2.positive_roots().begin(), c2.positive_roots().end());
  std::vector<QVector> expect{{1, -1}, {0, 2}, {1, 1}, {2, 0}};
  CHECK(pos == expect);
  CHECK(c2.cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
}

TEST_CASE("build: invalid types") {
  CHECK_THROWS_AS(RootSystem::build(Series::E, 5), ghc::InputError);
  CHECK_THROWS_AS(RootSystem::build(Series::F, 3), ghc::InputError);
  CHECK_THROWS_AS(RootSystem::build(Series::B, 1), ghc::InputError);
  CHECK_THROWS_AS(RootSystem::build(Series::A, 0), ghc::InputError);
  CHECK_THROWS_AS(RootSystem::build(Series::A, 9), ghc::InputError);
  CHECK_NOTHROW(RootSystem::build(Series::A, 9, {.max_rank = 9}));
  CHECK_THROWS_AS(parse_series("Q"), ghc::InputError);
  CHECK(parse_series("c") == Series::C);
}

TEST_CASE("root counts and structural invariants, rank <= 8") {
  for (auto [s, n, count] : classical_counts()) {
    auto rs = RootSystem::build(s, n);
    INFO(rs.name());
    CHECK(rs.size() == count);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      CHECK(rs.root(rs.negative(i)) == -rs.root(i));
      const auto &c = rs.simple_coefficients(i);
      bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
      CHECK(nonneg == rs.is_positive(i));
    }
    for (const auto &a : rs.simple_roots()) {
      for (const auto &b : rs.roots()) CHECK(rs.pairing(b, a).is_integer());
    }
    CHECK(weyl_dim(rs, QVector(rs.ambient_dim())) == 1);
    // highest root is the highest weight of the adjoint representation
    const QVector &theta = rs.root(rs.num_positive() - 1);
    CHECK(weyl_dim(rs, theta) == static_cast<std::int64_t>(rs.size()) + n);
    for (std::size_t i = 0; i < rs.fundamental_weights().size(); ++i) {
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        CHECK(rs.pairing(rs.fundamental_weights()[i], rs.root(j)) == Rational(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("height") {
  auto a2 = RootSystem::build(Series::A, 2);
  CHECK(height(a2, a2.root(0)) == 1);
  CHECK(height(a2, a2.root(0) + a2.root(1)) == 2);
  CHECK(height(a2, -a2.root(0)) == -1);
  CHECK_THROWS_AS(height(a2, QVector{1, 1, 0}), ghc::InputError);

  auto c2 = RootSystem::build(Series::C, 2);
  CHECK(height(c2, QVector{2, 0}) == 3);
}

TEST_CASE("weyl_dim examples") {
  auto a1 = RootSystem::build(Series::A, 1);
  CHECK(weyl_dim(a1, a1.fundamental_weights()[0]) == 2);
  auto a2 = RootSystem::build(Series::A, 2);
  CHECK(weyl_dim(a2, a2.fundamental_weights()[0] + a2.fundamental_weights()[1]) == 8);
  auto d2 = RootSystem::build(Series::D, 2);
  CHECK(weyl_dim(d2, QVector{Rational(5, 2), Rational(3, 2)}) == 10);
  auto c2 = RootSystem::build(Series::C, 2);
  CHECK(weyl_dim(c2, QVector{2, 0}) == 10);

  // fundamental representations of sl(n+1) are exterior powers
  auto a4 = RootSystem::build(Series::A, 4);
  std::vector<std::int64_t> binom{5, 10, 10, 5};
  for (std::size_t k = 0; k < 4; ++k) CHECK(weyl_dim(a4, a4.fundamental_weights()[k]) == binom[k]);

  CHECK_THROWS_AS(weyl_dim(a2, -a2.fundamental_weights()[0]), ghc::InputError);
  CHECK_THROWS_AS(weyl_dim(a2, a2.fundamental_weights()[0] * Rational(1, 2)), ghc::InputError);
}

TEST_CASE("integrality and dominance") {
  auto a2 = RootSystem::build(Series::A, 2);
  const auto &w1 = a2.fundamental_weights()[0];
  CHECK(is_integral(a2, w1));
  CHECK(is_dominant(a2, w1));
  CHECK_FALSE(is_integral(a2, w1 * Rational(1, 2)));

  auto c2 = RootSystem::build(Series::C, 2);
  QVector lam{Rational(3, 2), Rational(1, 2)};
  CHECK(c2.pairing(lam, c2.root(0)) == 1);
  CHECK(c2.pairing(lam, c2.root(1)) == Rational(1, 2));
  CHECK_FALSE(is_integral(c2, lam));
}

TEST_CASE("regular integral") {
  auto a1 = RootSystem::build(Series::A, 1);
  CHECK(is_regular_integral(a1, QVector(2)));
  CHECK_FALSE(is_regular_integral(a1, -a1.rho()));
  auto a2 = RootSystem::build(Series::A, 2);
  CHECK_FALSE(is_regular_integral(a2, a2.fundamental_weights()[0] * Rational(1, 2)));
}

TEST_CASE("height distribution") {
  CHECK(height_distribution(RootSystem::build(Series::A, 2)) == std::map<int, int>{{1, 2}, {2, 1}});
  CHECK(height_distribution(RootSystem::build(Series::C, 2)) == std::map<int, int>{{1, 2}, {2, 1}, {3, 1}});
  CHECK(height_distribution(RootSystem::build(Series::A, 3)) == std::map<int, int>{{1, 3}, {2, 2}, {3, 1}});
  for (auto [s, n, count] : classical_counts()) {
    auto rs = RootSystem::build(s, n);
    int total = 0;
    int prev = 1 << 30;
    for (auto [h, c] : height_distribution(rs)) {
      total += c;
      CHECK(c <= prev); // a partition
      prev = c;
    }
    CHECK(static_cast<std::size_t>(total) == rs.num_positive());
  }
}

TEST_CASE("closed subsets") {
  auto a1 = RootSystem::build(Series::A, 1);
  auto closed = enumerate_closed_subsets(a1);
  CHECK(closed.size() == 4);

  auto a2 = RootSystem::build(Series::A, 2);
  std::size_t brute = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    RootSet s(6);
    for (std::size_t i = 0; i < 6; ++i) {
      if (mask >> i & 1U) s.insert(i);
    }
    if (is_closed(a2, s)) ++brute;
  }
  auto enumerated = enumerate_closed_subsets(a2);
  CHECK(enumerated.size() == brute);
  for (const auto &s : enumerated) CHECK(is_closed(a2, s));

  RootSet borel(6, {0, 1, 2});
  CHECK(is_parabolic(a2, borel));
  CHECK_FALSE(is_parabolic(a2, RootSet(6, {0})));
  CHECK(closure(a2, RootSet(6, {0, 1})) == borel);
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_group_permutations(RootSystem::build(Series::A, 3)).size() == 24);
  CHECK(weyl_group_permutations(RootSystem::build(Series::C, 2)).size() == 8);
  CHECK(weyl_group_permutations(RootSystem::build(Series::G, 2)).size() == 12);
}
