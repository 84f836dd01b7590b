#include <doctest.h>

#include <random>

#include "mgb/errors.hpp"
#include "mgb/grading.hpp"
#include "random_ideals.hpp"

using namespace mgb;

namespace {

const GradingMap kXY({{1, 0}, {0, 1}});
const std::vector<std::string> kNames{"x", "y"};
const PolyRing kRing(PrimeField(101), MonomialOrder(OrderKind::DegRevLex, 2));

}  // namespace

TEST_CASE("monomial degrees") {
  CHECK(monomial_multidegree(Monomial{2, 3}, kXY) == Multidegree{2, 3});
  CHECK(monomial_multidegree(Monomial{0, 0}, kXY) == Multidegree{0, 0});
  CHECK(monomial_multidegree(Monomial{1, 1}, kXY) == Multidegree{1, 1});
}

TEST_CASE("homogeneity") {
  const auto d = homogeneous_degree(parse_polynomial("x", kRing, kNames), kXY);
  REQUIRE(std::holds_alternative<Multidegree>(d));
  CHECK(std::get<Multidegree>(d) == Multidegree{1, 0});

  const auto bad = homogeneous_degree(parse_polynomial("x^2 + y", kRing, kNames), kXY);
  REQUIRE(std::holds_alternative<NotHomogeneous>(bad));
  CHECK(std::get<NotHomogeneous>(bad).first == Multidegree{2, 0});
  CHECK(std::get<NotHomogeneous>(bad).other == Multidegree{0, 1});

  CHECK_THROWS_AS(homogeneous_degree(kRing.zero(), kXY), UsageError);
}

TEST_CASE("commutator entry has degree (1,1)") {
  const ProblemSpec spec = commuting_matrices(2);
  const Polynomial f = parse_polynomial("x12*y21 - x21*y12", spec.ring(), spec.variables);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(monomial_multidegree(f.monomial(i), spec.grading) == Multidegree{1, 1});
  }
  CHECK(std::get<Multidegree>(homogeneous_degree(f, spec.grading)) == Multidegree{1, 1});
}

TEST_CASE("grading validation") {
  CHECK_THROWS_AS(GradingMap({{1, 0}, {1}}), InputError);
  CHECK_THROWS_AS(GradingMap({{1, 0}, {0, 0}}), InputError);
}

TEST_CASE("degree of a product is the sum of degrees") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const ProblemSpec spec = mgbtest::random_bigraded_ideal(1000 + trial);
    const PolyRing ring = spec.ring();
    const Polynomial f = mgbtest::random_homogeneous(rng, ring, spec.grading, {1, 1}, 4);
    const Polynomial g = mgbtest::random_homogeneous(rng, ring, spec.grading, {2, 0}, 4);
    if (f.is_zero() || g.is_zero()) continue;
    const Polynomial fg = ring.mul(f, g);
    CHECK(is_homogeneous_of(fg, Multidegree{3, 1}, spec.grading));
    CHECK(is_homogeneous_of(ring.add(f, f), Multidegree{1, 1}, spec.grading));
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        CHECK(monomial_multidegree(multiply(f.monomial(i), g.monomial(j)), spec.grading) ==
              add(monomial_multidegree(f.monomial(i), spec.grading),
                  monomial_multidegree(g.monomial(j), spec.grading)));
      }
    }
  }
}
