#pragma once

#include <chrono>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "mgb/buchberger.hpp"
#include "mgb/engine.hpp"

namespace mgb {

/// max/min/mean of a set of durations; all zero when empty.
struct TimingSummary {
  std::chrono::nanoseconds max{0};
  std::chrono::nanoseconds min{0};
  std::chrono::nanoseconds mean{0};
  std::chrono::nanoseconds total{0};
  std::size_t count = 0;
};

TimingSummary summarize(const std::vector<std::chrono::nanoseconds>& samples);

struct RoundAggregate {
  std::size_t round = 0;
  std::size_t degrees = 0;
  std::chrono::nanoseconds span{0};
  TimingSummary reduce;
  TimingSummary genpairs;
  /// Largest total reduction time of one worker within the round.
  std::chrono::nanoseconds max_worker_phase{0};
};

struct RunReport {
  std::string problem;
  std::string engine;
  std::size_t workers = 1;
  AntichainStrategy strategy = AntichainStrategy::MinimalOccupied;
  CriteriaConfig criteria;
  std::chrono::nanoseconds wallclock{0};
  std::size_t basis_size = 0;
  std::size_t reduced_size = 0;
  std::size_t pairs_considered = 0;
  std::size_t pairs_eliminated = 0;
  std::size_t pairs_enqueued = 0;
  std::vector<DegreeStats> degrees;
  std::vector<RoundAggregate> rounds;
  TimingSummary reduce;
  TimingSummary genpairs;
  /// Total reduction time per worker (index = worker id).
  std::vector<std::chrono::nanoseconds> worker_busy;
  TimingSummary worker_busy_summary;
};

RunReport make_report(const std::string& problem, const EngineResult& result,
                      const EngineOptions& options, std::size_t reduced_size);

std::vector<RoundAggregate> aggregate_rounds(
    const std::vector<DegreeStats>& stats, const std::vector<RoundStats>& rounds);

/// Exactly "workers,round,degree,spairs_in,zero_reductions,new_elements,
/// reduce_ms,genpairs_ms,worker_id" (one line).
std::string degree_csv_header();
void write_degree_rows(std::ostream& out, const RunReport& report);

std::string round_csv_header();
void write_round_rows(std::ostream& out, const RunReport& report);

std::string summary_csv_header();
void write_summary_row(std::ostream& out, const RunReport& report);

std::string summary_text(const RunReport& report);

double to_ms(std::chrono::nanoseconds d);

}  // namespace mgb
