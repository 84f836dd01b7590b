#include <doctest.h>

#include <random>

#include "harness.hpp"
#include "mgb/buchberger.hpp"
#include "mgb/engine.hpp"
#include "mgb/errors.hpp"
#include "random_ideals.hpp"

using namespace mgb;

namespace {

const GradingMap kXY({{1, 0}, {0, 1}});
const std::vector<std::string> kNames{"x", "y"};
const PolyRing kRing(PrimeField(101), MonomialOrder(OrderKind::DegRevLex, 2));

Polynomial P(std::string_view text) { return parse_polynomial(text, kRing, kNames); }

BasisStore store_of(std::initializer_list<std::string_view> polys) {
  BasisStore store(kXY);
  for (auto p : polys) store.append(kRing.make_monic(P(p)));
  return store;
}

}  // namespace

TEST_CASE("s-polynomial examples") {
  CHECK(s_polynomial(kRing, P("x^2"), P("x*y")).is_zero());
  CHECK(s_polynomial(kRing, P("x*y + y^2"), P("x^2")) == P("x*y^2"));
  CHECK(s_polynomial(kRing, P("x*y + y^2"), P("x*y + y^2")).is_zero());
}

TEST_CASE("s-polynomial agrees with the textbook oracle") {
  const naive::Ring oracle{101, naive::Order::DegRevLex, 2};
  const Polynomial f = P("x*y + y^2"), g = P("x^2");
  const naive::Poly expected =
      oracle.spoly(naive::from_library(oracle, f), naive::from_library(oracle, g));
  CHECK(naive::from_library(oracle, s_polynomial(kRing, f, g)) == expected);
}

TEST_CASE("reduction examples") {
  const BasisStore xy = store_of({"x*y"});
  CHECK(reduce(kRing, P("x^2*y + x*y^2"), BasisView::all(xy)).is_zero());
  const BasisStore x2 = store_of({"x^2"});
  CHECK(reduce(kRing, P("x^2 + y^2"), BasisView::all(x2)) == P("y^2"));
  const BasisStore none(kXY);
  CHECK(reduce(kRing, P("x^2 + 3*x*y"), BasisView::all(none)) == P("x^2 + 3*x*y"));
}

TEST_CASE("reduction against a bounded view requires degree above the bound") {
  const BasisStore store = store_of({"x"});
  const BasisView v = BasisView::below(store, {1, 0});
  CHECK_THROWS_AS(reduce(kRing, P("y"), v), UsageError);
  CHECK(reduce(kRing, P("x*y + y*x"), v).is_zero());
}

TEST_CASE("pair generation") {
  const BasisStore two = store_of({"x*y", "x^2"});
  const std::size_t one[] = {1};
  const CriteriaConfig off{false, false};
  PairGeneration g = generate_pairs(one, two, off);
  REQUIRE(g.pairs.size() == 1);
  CHECK(g.pairs[0].i == 0);
  CHECK(g.pairs[0].j == 1);
  CHECK(g.pairs[0].lcm == Monomial{2, 1});
  CHECK(g.pairs[0].degree == Multidegree{2, 1});

  const BasisStore coprime = store_of({"x^2", "y^2"});
  g = generate_pairs(one, coprime, CriteriaConfig{});
  CHECK(g.pairs.empty());
  CHECK(g.considered == 1);
  CHECK(g.eliminated == 1);

  CHECK(generate_pairs({}, two, CriteriaConfig{}).pairs.empty());
}

TEST_CASE("chain criterion removes a redundant pair") {
  // (0,2) has lcm x^2*y^2; lcm(x*y, y^2) = x*y^2 properly divides it.
  const BasisStore store = store_of({"x^2", "x*y", "y^2"});
  const std::size_t j[] = {2};
  const PairGeneration g = generate_pairs(j, store, CriteriaConfig{false, true});
  REQUIRE(g.pairs.size() == 1);
  CHECK(g.pairs[0].i == 1);
  CHECK(g.eliminated == 1);
}

TEST_CASE("pending queue buckets by degree") {
  const BasisStore store = store_of({"x*y", "x^2", "y^2"});
  PendingQueue q;
  q.push(make_pair(0, 1, store));
  q.push(make_pair(0, 2, store));
  q.push(make_pair(1, 2, store));
  CHECK(q.pair_count() == 3);
  CHECK(q.occupied() == DegreeSet{{2, 1}, {1, 2}, {2, 2}});
  CHECK(q.take({2, 1}).size() == 1);
  CHECK(q.take({2, 1}).empty());
  CHECK(q.occupied() == DegreeSet{{1, 2}, {2, 2}});
}

TEST_CASE("empty bucket") {
  const BasisStore store(kXY);
  const BucketResult r = reduce_bucket(kRing, {1, 1}, {}, store);
  CHECK(r.new_elements.empty());
  CHECK(r.stats.spairs_in == 0);
  CHECK(r.stats.zero_reductions == 0);
}

TEST_CASE("normalization of generator lists") {
  CHECK(normalize_generators(kRing, kXY, {}).empty());
  CHECK(normalize_generators(kRing, kXY, {kRing.zero()}).empty());
  CHECK(normalize_generators(kRing, kXY, {P("2*x"), P("x")}) == std::vector{P("x")});
  try {
    normalize_generators(kRing, kXY, {P("x"), P("x + y^2")});
    FAIL("expected InputError");
  } catch (const InputError& e) {
    const std::string what = e.what();
    CHECK(what.find("(1,0)") != std::string::npos);
    CHECK(what.find("(0,2)") != std::string::npos);
  }
}

TEST_CASE("interreduction") {
  const GradingMap g({{1}, {1}});
  const auto Q = [&](std::string_view t) { return parse_polynomial(t, kRing, kNames); };
  // {x, x + y} -> {x, y}; canonical order puts y first.
  CHECK(normalize_generators(kRing, g, {Q("x"), Q("x + y")}) == std::vector{Q("y"), Q("x")});
  CHECK(normalize_generators(kRing, g, {Q("2*x")}) == std::vector{Q("x")});

  BasisStore store(g);
  store.append(Q("x + y"));
  store.append(Q("y"));
  const BasisStore reduced = interreduce(kRing, store);
  CHECK(reduced.polynomials() == std::vector{Q("y"), Q("x")});
  CHECK(interreduce(kRing, reduced).polynomials() == reduced.polynomials());
}

TEST_CASE("reduction against the full store equals reduction against the degree-bounded view") {
  std::mt19937_64 rng(23);
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; checked < 1000; ++seed) {
    const ProblemSpec spec = mgbtest::random_bigraded_ideal(seed);
    const PolyRing ring = spec.ring();
    EngineOptions options;
    const EngineResult run = buchberger_serial(ring, spec.grading, spec.generators, options);
    const BasisStore& store = run.state.store;
    for (int k = 0; k < 10; ++k) {
      const Multidegree d{rng() % 4, rng() % 4};
      const Polynomial p = mgbtest::random_homogeneous(rng, ring, spec.grading, d, 6);
      if (p.is_zero()) continue;
      CHECK(reduce(ring, p, BasisView::all(store)) ==
            reduce(ring, p, BasisView::below(store, d)));
      ++checked;
    }
  }
}

TEST_CASE("s-polynomials of homogeneous elements are homogeneous of the lcm degree") {
  std::mt19937_64 rng(29);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const ProblemSpec spec = mgbtest::random_bigraded_ideal(seed);
    const PolyRing ring = spec.ring();
    const auto gens = normalize_generators(ring, spec.grading, spec.generators);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const Polynomial s = s_polynomial(ring, gens[i], gens[j]);
        const Multidegree d = monomial_multidegree(
            lcm(gens[i].leading_monomial(), gens[j].leading_monomial()), spec.grading);
        if (!s.is_zero()) CHECK(is_homogeneous_of(s, d, spec.grading));
        const Polynomial r = reduce(ring, s, BasisView::over({}, spec.grading));
        if (!r.is_zero()) CHECK(is_homogeneous_of(r, d, spec.grading));
      }
    }
  }
}
