#include <doctest.h>

#include <algorithm>

#include "ghc/error.hpp"
#include "ghc/rootsys/closed_sets.hpp"
#include "ghc/shadow/shadow.hpp"

using namespace ghc::shadow;
using ghc::exact::QVector;
using ghc::rootsys::Series;

namespace {

void check_partition(const RootSystem &rs, const ShadowDecomposition &sd) {
  const std::size_t n = rs.size();
  CHECK((sd.infinite | sd.finite | sd.plus | sd.minus) == RootSet::full(n));
  CHECK(sd.infinite.count() + sd.finite.count() + sd.plus.count() + sd.minus.count() == n);
  CHECK(ghc::rootsys::negate(rs, sd.infinite) == sd.infinite);
  CHECK(ghc::rootsys::negate(rs, sd.finite) == sd.finite);
  CHECK(ghc::rootsys::negate(rs, sd.plus) == sd.minus);
}

} // namespace

TEST_CASE("shadow: A1 examples") {
  auto a1 = RootSystem::build(Series::A, 1);
  auto all = shadow(a1, RootSet::full(2));
  CHECK(all.finite == RootSet::full(2));
  CHECK(all.infinite.empty());
  CHECK(parabolic_pM(all) == RootSet::full(2));
  CHECK(fernando_fk(all) == RootSet::full(2));

  auto borel = shadow(a1, RootSet(2, {0}));
  CHECK(borel.plus == RootSet(2, {0}));
  CHECK(borel.minus == RootSet(2, {1}));
  CHECK(borel.infinite.empty());
  CHECK(borel.finite.empty());
  CHECK(parabolic_pM(borel) == RootSet(2, {0}));
  CHECK(fernando_fk(borel) == RootSet(2, {0}));

  auto cartan = shadow(a1, RootSet(2));
  CHECK(cartan.infinite == RootSet::full(2));
  CHECK(fernando_fk(cartan).empty());
}

TEST_CASE("shadow: A2 Borel gives back the Borel") {
  auto a2 = RootSystem::build(Series::A, 2);
  RootSet borel(6, {0, 1, 2});
  auto sd = shadow(a2, borel);
  CHECK(sd.plus == borel);
  CHECK(parabolic_pM(sd) == borel);
}

TEST_CASE("shadow: rejects non-closed input") {
  auto a2 = RootSystem::build(Series::A, 2);
  CHECK_THROWS_AS(shadow(a2, RootSet(6, {0, 1})), ghc::InputError);
  CHECK_THROWS_AS(shadow(a2, RootSet(4)), ghc::InputError);
}

TEST_CASE("shadow: exhaustive parabolicity, partition and round trip") {
  for (auto [s, n] : {std::pair{Series::A, 2}, {Series::A, 3}, {Series::C, 2}}) {
    auto rs = RootSystem::build(s, n);
    INFO(rs.name());
    std::size_t parabolics = 0;
    for (const auto &fk : ghc::rootsys::enumerate_closed_subsets(rs)) {
      auto sd = shadow(rs, fk);
      check_partition(rs, sd);
      CHECK(ghc::rootsys::is_parabolic(rs, parabolic_pM(sd)));
      if (ghc::rootsys::is_parabolic(rs, fk)) {
        ++parabolics;
        CHECK(fernando_fk(sd) == fk);
      }
    }
    CHECK(parabolics > 0);
  }
}

TEST_CASE("support_shape") {
  auto a1 = RootSystem::build(Series::A, 1);
  const QVector nu{QVector{1, 0} * ghc::exact::Rational(1, 3)};
  const QVector alpha = a1.root(0);

  auto full = shadow(a1, RootSet::full(2));
  CHECK(support_shape(a1, full, {QVector(2)}, 3) == std::vector<Weight>{QVector(2)});

  auto cartan = shadow(a1, RootSet(2));
  auto got = support_shape(a1, cartan, {nu}, 2);
  std::vector<Weight> expect{nu - alpha * 2, nu - alpha, nu, nu + alpha, nu + alpha * 2};
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);

  auto borel = shadow(a1, RootSet(2, {0}));
  expect = {nu, nu - alpha};
  std::sort(expect.begin(), expect.end());
  CHECK(support_shape(a1, borel, {nu}, 1) == expect);

  CHECK_THROWS_AS(support_shape(a1, borel, {QVector(3)}, 1), ghc::InputError);
  CHECK_THROWS_AS(support_shape(a1, borel, {nu}, -1), ghc::InputError);

  auto a2 = RootSystem::build(Series::A, 2);
  auto sd = shadow(a2, RootSet(6, {0}));
  std::vector<Weight> prev;
  for (int r = 0; r <= 4; ++r) {
    auto cur = support_shape(a2, sd, {QVector(3)}, r);
    CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    prev = std::move(cur);
  }
}
