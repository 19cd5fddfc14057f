#include <doctest.h>

#include <random>

#include "ghc/error.hpp"
#include "ghc/exact/cone.hpp"
#include "ghc/exact/linalg.hpp"
#include "ghc/exact/lp.hpp"
#include "ghc/exact/rational.hpp"
#include "support/cone_fixtures.hpp"

using ghc::exact::combine;
using ghc::exact::cone_member;
using ghc::exact::cones_intersect_trivially;
using ghc::exact::LinearEquality;
using ghc::exact::lp_feasible;
using ghc::exact::QVector;
using ghc::exact::Rational;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational(0, -7).den() == 1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 2) * Rational(2, 3) == Rational(1));
  CHECK(Rational(-7, 2).floor() == Rational(-4));
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(5, 2).is_half_odd());
  CHECK_FALSE(Rational(1, 3).is_half_odd());
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), std::overflow_error);
}

TEST_CASE("rational parse/print round trip") {
  CHECK(Rational::parse(" 3/2 ") == Rational(3, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse("+4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), ghc::InputError);
  CHECK_THROWS_AS(Rational::parse("x"), ghc::InputError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ghc::InputError);
  CHECK_THROWS_AS(Rational::parse(""), ghc::InputError);

  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000), den(1, 100000);
  for (int i = 0; i < 2000; ++i) {
    Rational q(num(rng), den(rng));
    CHECK(Rational::parse(q.str()) == q);
  }
}

TEST_CASE("linear algebra helpers") {
  std::vector<QVector> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(ghc::exact::rank(rows) == 2);
  auto ns = ghc::exact::nullspace(rows, 3);
  REQUIRE(ns.size() == 1);
  CHECK(ghc::exact::mat_vec(rows, ns[0]).is_zero());

  auto x = ghc::exact::solve(rows, QVector{1, 2, 1}, 3);
  REQUIRE(x.has_value());
  CHECK(ghc::exact::mat_vec(rows, *x) == QVector{1, 2, 1});
  CHECK_FALSE(ghc::exact::solve(rows, QVector{1, 3, 1}, 3).has_value());

  std::vector<QVector> m{{2, 1}, {1, 1}};
  auto inv = ghc::exact::inverse(m);
  CHECK(inv[0] == QVector{1, -1});
  CHECK(inv[1] == QVector{-1, 2});
  CHECK_THROWS_AS(ghc::exact::inverse(rows), ghc::InputError);
}

TEST_CASE("lp_feasible examples") {
  SUBCASE("x >= 0, x = 1") {
    std::vector<LinearEquality> eq{{QVector{1}, 1}};
    auto r = lp_feasible(eq, 1);
    REQUIRE(r.feasible);
    CHECK(r.solution == QVector{1});
  }
  SUBCASE("x >= 0, x = -1") {
    std::vector<LinearEquality> eq{{QVector{1}, -1}};
    CHECK_FALSE(lp_feasible(eq, 1).feasible);
  }
  SUBCASE("a + 2b = 3, a - b = 0") {
    std::vector<LinearEquality> eq{{QVector{1, 2}, 3}, {QVector{1, -1}, 0}};
    auto r = lp_feasible(eq, 2);
    REQUIRE(r.feasible);
    CHECK(r.solution == QVector{1, 1});
  }
  SUBCASE("dimension mismatch") {
    std::vector<LinearEquality> eq{{QVector{1, 2}, 3}};
    CHECK_THROWS_AS(lp_feasible(eq, 3), ghc::InputError);
  }
  SUBCASE("no rows") { CHECK(lp_feasible({}, 2).solution == QVector{0, 0}); }
  SUBCASE("degenerate system terminates") {
    // Beale-style degenerate vertex; Bland's rule must not cycle.
    std::vector<LinearEquality> eq{{QVector{Rational(1, 4), -8, -1, 9, 1, 0, 0}, 0},
                                   {QVector{Rational(1, 2), -12, Rational(-1, 2), 3, 0, 1, 0}, 0},
                                   {QVector{0, 0, 1, 0, 0, 0, 1}, 1}};
    auto r = lp_feasible(eq, 7);
    REQUIRE(r.feasible);
    for (const auto &e : eq) CHECK(e.coeffs.dot(r.solution) == e.rhs);
  }
}

TEST_CASE("cone_member examples") {
  std::vector<QVector> none;
  CHECK(cone_member(QVector{0, 0}, none).member);
  CHECK_FALSE(cone_member(QVector{1, 0}, none).member);

  std::vector<QVector> axes{{1, 0}, {0, 1}};
  auto r = cone_member(QVector{1, 1}, axes);
  REQUIRE(r.member);
  CHECK(r.coefficients == std::vector<Rational>{1, 1});

  std::vector<QVector> g{{1, 1}, {0, -1}};
  auto s = cone_member(QVector{1, 0}, g);
  REQUIRE(s.member);
  CHECK(s.coefficients == std::vector<Rational>{1, 1});

  CHECK_THROWS_AS(cone_member(QVector{1, 0, 0}, g), ghc::InputError);
}

TEST_CASE("cones_intersect_trivially examples") {
  std::vector<QVector> e1{{1, 0}}, e2{{0, 1}};
  CHECK(cones_intersect_trivially(e1, e2).trivial);

  std::vector<QVector> axes{{1, 0}, {0, 1}}, diag{{1, 1}};
  auto r = cones_intersect_trivially(axes, diag);
  REQUIRE_FALSE(r.trivial);
  CHECK(r.witness->point == QVector{1, 1});

  std::vector<QVector> a{{1, -1}, {-1, 2}};
  auto s = cones_intersect_trivially(a, e2);
  REQUIRE_FALSE(s.trivial);
  CHECK(s.witness->point == QVector{0, 1});
  CHECK(s.witness->coefficients_a == std::vector<Rational>{1, 1});

  std::vector<QVector> empty;
  CHECK(cones_intersect_trivially(empty, e1).trivial);
  CHECK(cones_intersect_trivially(e1, empty).trivial);
  std::vector<QVector> bad{{1, 0, 0}};
  CHECK_THROWS_AS(cones_intersect_trivially(e1, bad), ghc::InputError);
}

TEST_CASE("cone_member agrees with the grid oracle") {
  using namespace ghc::testing;
  for (const auto &f : membership_fixtures()) {
    auto gens = to_q(f.gens);
    QVector target = to_q(f.scaled_target, 4);
    auto lp = cone_member(target, gens);
    bool grid = grid_member(f.scaled_target, f.gens);
    CHECK(lp.member == f.expected_member);
    CHECK(grid == f.expected_member);
    if (lp.member && !gens.empty()) {
      for (const auto &c : lp.coefficients) CHECK(c >= 0);
      CHECK(combine(gens, lp.coefficients) == target);
    }
  }
}

TEST_CASE("cones_intersect_trivially agrees with the grid oracle and is symmetric") {
  using namespace ghc::testing;
  for (const auto &f : intersection_fixtures()) {
    auto a = to_q(f.a);
    auto b = to_q(f.b);
    auto ab = cones_intersect_trivially(a, b);
    auto ba = cones_intersect_trivially(b, a);
    CHECK(ab.trivial == !f.expected_nontrivial);
    CHECK(ba.trivial == ab.trivial);
    CHECK(grid_intersect_nontrivially(f.a, f.b, f.dim) == f.expected_nontrivial);
    if (!ab.trivial) {
      const auto &w = *ab.witness;
      CHECK_FALSE(w.point.is_zero());
      CHECK(combine(a, w.coefficients_a) == w.point);
      CHECK(combine(b, w.coefficients_b) == w.point);
    }
  }
}
