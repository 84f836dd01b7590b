#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mgb/ideals.hpp"

namespace mgbtest {

/// Homogeneous polynomial of the given degree with up to `max_terms` terms
/// (zero only if no monomial has that degree).
mgb::Polynomial random_homogeneous(std::mt19937_64& rng, const mgb::PolyRing& ring,
                                   const mgb::GradingMap& grading,
                                   const mgb::Multidegree& degree,
                                   std::size_t max_terms);

/// Random bigraded ideal: 3..6 variables of degree (1,0) or (0,1) (both
/// kinds present), 2..5 nonzero generators of total degree 2 or 3.
mgb::ProblemSpec random_bigraded_ideal(std::uint64_t seed,
                                       std::uint32_t modulus = 101);

/// Ideal with pairwise coprime monomial generators.
mgb::ProblemSpec random_coprime_monomials(std::uint64_t seed,
                                          std::uint32_t modulus = 101);

std::vector<mgb::ProblemSpec> random_corpus(std::size_t count,
                                            std::uint64_t first_seed = 1);

}  // namespace mgbtest
