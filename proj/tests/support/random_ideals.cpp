#include "random_ideals.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace mgbtest {

using namespace mgb;

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random monomial of the given degree, or nullopt if there is none.
std::optional<Monomial> random_monomial(std::mt19937_64& rng,
                                        const GradingMap& grading,
                                        const Multidegree& degree) {
  const std::size_t n = grading.nvars();
  Monomial m(n);
  for (std::size_t k = 0; k < degree.dim(); ++k) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < n; ++v) {
      if (grading.variable_degree(v)[k] == 1) vars.push_back(v);
    }
    if (degree[k] > 0 && vars.empty()) return std::nullopt;
    for (std::uint64_t e = 0; e < degree[k]; ++e) {
      m[vars[uniform(rng, 0, vars.size() - 1)]] += 1;
    }
  }
  return m;
}

}  // namespace

Polynomial random_homogeneous(std::mt19937_64& rng, const PolyRing& ring,
                              const GradingMap& grading,
                              const Multidegree& degree, std::size_t max_terms) {
  std::vector<Term> terms;
  const std::size_t count = uniform(rng, 1, max_terms);
  const std::uint32_t p = ring.field().modulus();
  for (std::size_t t = 0; t < count; ++t) {
    auto m = random_monomial(rng, grading, degree);
    if (!m) break;
    terms.push_back({static_cast<Coeff>(uniform(rng, 1, p - 1)), *m});
  }
  return ring.from_terms(std::move(terms));
}

namespace {

ProblemSpec random_ring(std::mt19937_64& rng, std::uint32_t modulus) {
  ProblemSpec spec;
  spec.field = PrimeField(modulus);
  const std::size_t n = uniform(rng, 3, 6);
  const std::size_t nx = uniform(rng, 1, n - 1);
  std::vector<Multidegree> degrees;
  for (std::size_t v = 0; v < n; ++v) {
    spec.variables.push_back("v" + std::to_string(v));
    degrees.push_back(v < nx ? Multidegree{1, 0} : Multidegree{0, 1});
  }
  std::shuffle(degrees.begin(), degrees.end(), rng);
  spec.grading = GradingMap(std::move(degrees));
  spec.order = MonomialOrder(OrderKind::DegRevLex, n);
  return spec;
}

}  // namespace

ProblemSpec random_bigraded_ideal(std::uint64_t seed, std::uint32_t modulus) {
  std::mt19937_64 rng(seed);
  ProblemSpec spec = random_ring(rng, modulus);
  const PolyRing ring = spec.ring();
  const std::size_t gens = uniform(rng, 2, 5);
  while (spec.generators.size() < gens) {
    const std::size_t total = uniform(rng, 2, 3);
    const std::size_t a = uniform(rng, 0, total);
    Polynomial g = random_homogeneous(rng, ring, spec.grading,
                                      Multidegree{a, total - a}, 5);
    if (!g.is_zero()) spec.generators.push_back(std::move(g));
  }
  return spec;
}

ProblemSpec random_coprime_monomials(std::uint64_t seed, std::uint32_t modulus) {
  std::mt19937_64 rng(seed);
  ProblemSpec spec = random_ring(rng, modulus);
  const PolyRing ring = spec.ring();
  const std::size_t n = spec.variables.size();
  std::vector<std::size_t> vars(n);
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  std::shuffle(vars.begin(), vars.end(), rng);
  // Disjoint variable groups give pairwise coprime monomials.
  std::size_t pos = 0;
  while (pos < n && spec.generators.size() < 5) {
    const std::size_t width = uniform(rng, 1, std::min<std::size_t>(2, n - pos));
    Monomial m(n);
    for (std::size_t k = 0; k < width; ++k) {
      m[vars[pos + k]] = static_cast<Exponent>(uniform(rng, 1, 3));
    }
    pos += width;
    const auto c = static_cast<Coeff>(uniform(rng, 1, modulus - 1));
    spec.generators.push_back(ring.term(c, m));
  }
  return spec;
}

std::vector<ProblemSpec> random_corpus(std::size_t count, std::uint64_t first_seed) {
  std::vector<ProblemSpec> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(random_bigraded_ideal(first_seed + k));
  }
  return out;
}

}  // namespace mgbtest
