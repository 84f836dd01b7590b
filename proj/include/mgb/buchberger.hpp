#pragma once

// S-pairs, normal forms, and the per-degree step shared by the serial and
// parallel engines.

#include <chrono>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mgb/basis.hpp"
#include "mgb/grading.hpp"
#include "mgb/lattice.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

struct CriteriaConfig {
  /// Skip pairs whose leading monomials are coprime.
  bool product = true;
  /// Skip (i, j) when some k < j has lcm(lm k, lm j) properly dividing
  /// lcm(lm i, lm j).
  bool chain = false;

  friend bool operator==(const CriteriaConfig&, const CriteriaConfig&) = default;
};

/// "none", "product" or "product+chain".
std::string to_string(const CriteriaConfig& criteria);
CriteriaConfig parse_criteria(std::string_view text);

struct SPair {
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial lcm;
  Multidegree degree;
  std::uint64_t sugar = 0;
};

SPair make_pair(std::size_t i, std::size_t j, const BasisStore& store);

/// Pending S-pairs bucketed by degree. Empty buckets are never kept.
class PendingQueue {
 public:
  using Buckets = std::map<Multidegree, std::vector<SPair>, DegreeKeyLess>;

  void push(SPair pair);
  void push(std::vector<SPair> pairs);
  /// Removes and returns the bucket at `degree` (empty if absent).
  std::vector<SPair> take(const Multidegree& degree);

  DegreeSet occupied() const;
  bool empty() const { return buckets_.empty(); }
  std::size_t pair_count() const;
  const Buckets& buckets() const { return buckets_; }

 private:
  Buckets buckets_;
};

struct PairGeneration {
  std::vector<SPair> pairs;
  std::size_t considered = 0;
  std::size_t eliminated = 0;
};

/// All pairs (i, j) with j in `new_indices` and i < j, minus those removed
/// by the enabled criteria.
PairGeneration generate_pairs(std::span<const std::size_t> new_indices,
                              const BasisStore& store,
                              const CriteriaConfig& criteria);

/// (L / lt f) f - (L / lt g) g with L = lcm(lm f, lm g).
Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f,
                        const Polynomial& g);

struct ReduceCounters {
  std::size_t steps = 0;
};

/// Full normal form of `p` against the view. The reducer for each monomial
/// is the earliest element of the view whose leading monomial divides it.
Polynomial reduce(const PolyRing& ring, const Polynomial& p,
                  const BasisView& view, ReduceCounters* counters = nullptr);

struct DegreeStats {
  Multidegree degree;
  std::size_t round = 0;
  std::size_t worker_id = 0;
  std::size_t spairs_in = 0;
  std::size_t zero_reductions = 0;
  std::size_t new_elements = 0;
  std::chrono::nanoseconds reduce_time{0};
  std::chrono::nanoseconds genpairs_time{0};
};

/// Sorts a bucket by (lcm under the monomial order, then (i, j)).
void sort_bucket(std::vector<SPair>& pairs, const MonomialOrder& order);

struct BucketResult {
  std::vector<Polynomial> new_elements;
  DegreeStats stats;
};

/// Reduces every pair of one degree against the elements of `store` of
/// degree <= `degree` plus the elements found earlier in this bucket. Does
/// not modify the store; new elements are monic and in discovery order.
BucketResult reduce_bucket(const PolyRing& ring, const Multidegree& degree,
                           std::vector<SPair> pairs, const BasisStore& store);

struct ProcessResult {
  std::vector<Polynomial> new_elements;
  std::vector<SPair> new_pairs;
  DegreeStats stats;
  PairGeneration generation;
};

/// One degree of the serial engine: reduce the bucket, append the survivors
/// to `store`, and queue the pairs they spawn.
ProcessResult process_degree(const PolyRing& ring, const Multidegree& degree,
                             PendingQueue& queue, BasisStore& store,
                             const CriteriaConfig& criteria);

/// Input normalization: checks homogeneity (InputError otherwise), drops
/// zeros and duplicates, makes monic, autoreduces, and sorts canonically.
std::vector<Polynomial> normalize_generators(const PolyRing& ring,
                                             const GradingMap& grading,
                                             std::vector<Polynomial> gens);

/// The reduced Gröbner basis of a Gröbner basis, in canonical order.
BasisStore interreduce(const PolyRing& ring, const BasisStore& store);

/// Sorts by (degree text, then leading monomial ascending).
void sort_canonical(const PolyRing& ring, const GradingMap& grading,
                    std::vector<Polynomial>& polys);

}  // namespace mgb
