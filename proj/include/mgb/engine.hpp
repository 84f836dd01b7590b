#pragma once

// State shared by the serial and parallel engines, and the serial engine
// itself. Both run the same round structure: pick an antichain of occupied
// degrees, reduce each of its buckets, merge the survivors.

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mgb/basis.hpp"
#include "mgb/buchberger.hpp"
#include "mgb/grading.hpp"
#include "mgb/lattice.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

struct RoundStats {
  std::size_t round = 0;
  std::size_t degrees = 0;
  /// From antichain extraction to the last merge of the round.
  std::chrono::nanoseconds span{0};
};

struct EngineState {
  BasisStore store;
  PendingQueue pending;
  std::size_t round = 0;
  std::size_t pairs_considered = 0;
  std::size_t pairs_eliminated = 0;
  std::size_t pairs_enqueued = 0;
  std::vector<DegreeStats> stats;
  std::vector<RoundStats> rounds;
};

struct EngineOptions {
  CriteriaConfig criteria;
  AntichainStrategy strategy = AntichainStrategy::MinimalOccupied;
  /// Written after every completed round when set.
  std::optional<std::filesystem::path> checkpoint;
  /// Stop (incomplete) after this many rounds in total.
  std::optional<std::size_t> stop_after_rounds;
};

struct EngineResult {
  EngineState state;
  std::string engine;
  std::size_t workers = 1;
  bool completed = false;
  std::chrono::nanoseconds wallclock{0};
};

/// Runtime checks of the scheduling invariants. Every planned degree is
/// "claimed"; a pair may never be queued at or below a claimed degree, and
/// degrees running concurrently must be pairwise incomparable.
class ScheduleAudit {
 public:
  void on_round(const std::vector<Multidegree>& plan);
  /// `running` are the degrees currently being processed.
  void on_dispatch(const Multidegree& degree,
                   const std::vector<Multidegree>& running,
                   const PendingQueue& pending) const;
  void on_new_pairs(std::span<const SPair> pairs) const;

 private:
  std::vector<Multidegree> claimed_;
};

/// Normalizes the generators and seeds the store and the pair queue.
EngineState seed_state(const PolyRing& ring, const GradingMap& grading,
                       std::vector<Polynomial> generators,
                       const CriteriaConfig& criteria);

/// Appends `elements` (monic, homogeneous) and queues the pairs they form
/// with everything in the store. Returns the appended indices.
std::vector<std::size_t> merge_elements(EngineState& state,
                                        std::vector<Polynomial> elements,
                                        const CriteriaConfig& criteria,
                                        std::chrono::nanoseconds* elapsed,
                                        const ScheduleAudit* audit = nullptr);

/// The next round's degrees in processing order (ascending text form).
std::vector<Multidegree> round_plan(const PendingQueue& pending,
                                    AntichainStrategy strategy);

EngineResult buchberger_serial(const PolyRing& ring, const GradingMap& grading,
                               std::vector<Polynomial> generators,
                               const EngineOptions& options);

/// Runs the serial engine from an existing state (e.g. a checkpoint).
EngineResult continue_serial(const PolyRing& ring, EngineState state,
                             const EngineOptions& options);

/// Text checkpoint: ring metadata, counters, store in index order, pending
/// pairs, and stats so far. Polynomials are stored as raw exponent vectors.
void save_checkpoint(const std::filesystem::path& path, const PolyRing& ring,
                     const EngineState& state);
/// Throws InputError if the file is malformed or was written for a
/// different ring or grading.
EngineState load_checkpoint(const std::filesystem::path& path,
                            const PolyRing& ring, const GradingMap& grading);

}  // namespace mgb
