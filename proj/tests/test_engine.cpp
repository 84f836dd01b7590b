#include <doctest.h>

#include <fstream>

#include "harness.hpp"
#include "mgb/buchberger.hpp"
#include "mgb/engine.hpp"
#include "mgb/errors.hpp"
#include "mgb/verify.hpp"
#include "random_ideals.hpp"

using namespace mgb;

namespace {

EngineResult serial(const ProblemSpec& spec, EngineOptions options = {}) {
  return buchberger_serial(spec.ring(), spec.grading, spec.generators, options);
}

}  // namespace

TEST_CASE("empty and zero generator lists give the empty basis") {
  ProblemSpec spec = commuting_matrices(1);
  REQUIRE(spec.generators.size() == 1);
  CHECK(spec.generators[0].is_zero());
  EngineResult r = serial(spec);
  CHECK(r.completed);
  CHECK(r.state.store.empty());
  CHECK(r.state.stats.empty());
  CHECK(r.state.rounds.empty());

  spec.generators.clear();
  CHECK(serial(spec).state.store.empty());
}

TEST_CASE("pairwise coprime monomials come back monic with no reductions") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const ProblemSpec spec = mgbtest::random_coprime_monomials(seed);
    const PolyRing ring = spec.ring();
    const EngineResult r = serial(spec);
    CHECK(r.state.pairs_enqueued == 0);
    CHECK(r.state.stats.empty());
    std::vector<Polynomial> expected;
    for (const auto& g : spec.generators) expected.push_back(ring.make_monic(g));
    sort_canonical(ring, spec.grading, expected);
    CHECK(r.state.store.polynomials() == expected);
  }
}

TEST_CASE("serial engine matches the textbook oracle on random ideals") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const ProblemSpec spec = mgbtest::random_bigraded_ideal(seed);
    const EngineResult r = serial(spec);
    const BasisStore reduced = interreduce(spec.ring(), r.state.store);
    CHECK_MESSAGE(mgbtest::canonical_of(spec, reduced.polynomials()) ==
                      mgbtest::oracle_reduced(spec),
                  "seed " << seed);
  }
}

TEST_CASE("commuting 2x2 and 3x3: certified and equal to the oracle") {
  for (std::size_t n : {2, 3}) {
    const ProblemSpec spec = commuting_matrices(n);
    const EngineResult r = serial(spec);
    const Certificate cert = certify_groebner(spec.ring(), spec.grading,
                                              r.state.store.polynomials(), spec.generators);
    CHECK(cert.ok);
    const BasisStore reduced = interreduce(spec.ring(), r.state.store);
    CHECK(mgbtest::canonical_of(spec, reduced.polynomials()) == mgbtest::oracle_reduced(spec));
  }
}

TEST_CASE("commuting 3x3 reduced basis matches the frozen file") {
  const ProblemSpec spec = commuting_matrices(3);
  const std::string golden = read_text_file(MGB_TEST_DATA_DIR "/commuting3.reduced.txt");
  CHECK(mgbtest::reduced_text(spec, 1) == golden);
  CHECK(parse_basis_file(golden).elements.size() == 26);
}

TEST_CASE("criteria and strategies do not change the reduced basis") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const ProblemSpec spec = mgbtest::random_bigraded_ideal(seed);
    const std::string reference =
        mgbtest::reduced_text(spec, 1, AntichainStrategy::MinimalOccupied, {false, false});
    for (auto strategy : {AntichainStrategy::MinimalOccupied, AntichainStrategy::TotalDegree}) {
      for (CriteriaConfig c : {CriteriaConfig{false, false}, CriteriaConfig{true, false},
                               CriteriaConfig{true, true}, CriteriaConfig{false, true}}) {
        CHECK(mgbtest::reduced_text(spec, 1, strategy, c) == reference);
      }
    }
  }
}

TEST_CASE("rounds process antichains in text order") {
  PendingQueue q;
  const ProblemSpec spec = commuting_matrices(2);
  BasisStore store(spec.grading);
  CHECK_THROWS_AS(round_plan(q, AntichainStrategy::MinimalOccupied), UsageError);
  EngineState state = seed_state(spec.ring(), spec.grading, spec.generators, {});
  const auto plan = round_plan(state.pending, AntichainStrategy::MinimalOccupied);
  REQUIRE(plan.size() == 2);
  CHECK(to_string(plan[0]) == "(1,2)");
  CHECK(to_string(plan[1]) == "(2,1)");
}

TEST_CASE("schedule audit flags violations") {
  ScheduleAudit audit;
  audit.on_round({{1, 1}, {2, 0}});
  PendingQueue empty;
  CHECK_NOTHROW(audit.on_dispatch({2, 0}, {{1, 1}}, empty));
  CHECK_THROWS_AS(audit.on_dispatch({2, 1}, {{1, 1}}, empty), InvariantViolation);
  CHECK_THROWS_AS(audit.on_dispatch({1, 1}, {{1, 1}}, empty), InvariantViolation);

  const ProblemSpec spec = commuting_matrices(2);
  EngineState state = seed_state(spec.ring(), spec.grading, spec.generators, {});
  // Pending holds (1,2) and (2,1); dispatching (2,2) would skip them.
  CHECK_THROWS_AS(audit.on_dispatch({2, 2}, {}, state.pending), InvariantViolation);

  SPair low;
  low.degree = {1, 0};
  CHECK_THROWS_AS(audit.on_new_pairs(std::vector{low}), InvariantViolation);
  SPair high;
  high.degree = {2, 2};
  CHECK_NOTHROW(audit.on_new_pairs(std::vector{high}));
}

TEST_CASE("checkpoint and resume give the same result") {
  const auto dir = mgbtest::scratch_dir("engine-checkpoint");
  const ProblemSpec spec = commuting_matrices(3);
  const PolyRing ring = spec.ring();
  const EngineResult full = serial(spec);
  REQUIRE(full.state.rounds.size() > 2);

  for (std::size_t stop : {1, 2, 4}) {
    EngineOptions options;
    options.checkpoint = dir / "state.txt";
    options.stop_after_rounds = stop;
    const EngineResult partial = serial(spec, options);
    CHECK_FALSE(partial.completed);
    CHECK(partial.state.round == stop);

    EngineState loaded = load_checkpoint(dir / "state.txt", ring, spec.grading);
    CHECK(loaded.store.polynomials() == partial.state.store.polynomials());
    CHECK(loaded.pending.pair_count() == partial.state.pending.pair_count());

    const EngineResult resumed = continue_serial(ring, std::move(loaded), {});
    CHECK(resumed.completed);
    CHECK(resumed.state.store.polynomials() == full.state.store.polynomials());
    CHECK(resumed.state.pairs_enqueued == full.state.pairs_enqueued);
    CHECK(resumed.state.stats.size() == full.state.stats.size());
  }
}

TEST_CASE("checkpoints are tied to their ring") {
  const auto dir = mgbtest::scratch_dir("engine-checkpoint-ring");
  const ProblemSpec spec = commuting_matrices(2);
  EngineOptions options;
  options.checkpoint = dir / "state.txt";
  serial(spec, options);
  const ProblemSpec other = commuting_matrices(2, 101);
  CHECK_THROWS_AS(load_checkpoint(dir / "state.txt", other.ring(), other.grading),
                  InputError);
  std::ofstream(dir / "broken.txt") << "mgb-checkpoint 1\nmodulus";
  CHECK_THROWS_AS(load_checkpoint(dir / "broken.txt", spec.ring(), spec.grading),
                  InputError);
  CHECK_THROWS_AS(load_checkpoint(dir / "missing.txt", spec.ring(), spec.grading),
                  InputError);
}

TEST_CASE("debug asserts accept every step of a full run") {
  set_debug_asserts(true);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CHECK_NOTHROW(serial(mgbtest::random_bigraded_ideal(seed)));
  }
  CHECK_NOTHROW(serial(commuting_matrices(3)));
  set_debug_asserts(false);
}
