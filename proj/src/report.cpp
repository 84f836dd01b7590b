#include "mgb/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace mgb {

using std::chrono::nanoseconds;

double to_ms(nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

namespace {

std::string ms(nanoseconds d) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << to_ms(d);
  return out.str();
}

std::string quoted(const Multidegree& d) { return '"' + to_string(d) + '"'; }

}  // namespace

TimingSummary summarize(const std::vector<nanoseconds>& samples) {
  TimingSummary s;
  if (samples.empty()) return s;
  s.count = samples.size();
  s.max = *std::max_element(samples.begin(), samples.end());
  s.min = *std::min_element(samples.begin(), samples.end());
  for (auto d : samples) s.total += d;
  s.mean = s.total / static_cast<long>(samples.size());
  return s;
}

std::vector<RoundAggregate> aggregate_rounds(
    const std::vector<DegreeStats>& stats, const std::vector<RoundStats>& rounds) {
  std::vector<RoundAggregate> out;
  for (const RoundStats& r : rounds) {
    RoundAggregate agg;
    agg.round = r.round;
    agg.degrees = r.degrees;
    agg.span = r.span;
    std::vector<nanoseconds> reduce, genpairs;
    std::map<std::size_t, nanoseconds> per_worker;
    for (const DegreeStats& s : stats) {
      if (s.round != r.round) continue;
      reduce.push_back(s.reduce_time);
      genpairs.push_back(s.genpairs_time);
      per_worker[s.worker_id] += s.reduce_time;
    }
    agg.reduce = summarize(reduce);
    agg.genpairs = summarize(genpairs);
    for (const auto& [worker, busy] : per_worker) {
      agg.max_worker_phase = std::max(agg.max_worker_phase, busy);
    }
    out.push_back(agg);
  }
  return out;
}

RunReport make_report(const std::string& problem, const EngineResult& result,
                      const EngineOptions& options, std::size_t reduced_size) {
  RunReport report;
  report.problem = problem;
  report.engine = result.engine;
  report.workers = result.workers;
  report.strategy = options.strategy;
  report.criteria = options.criteria;
  report.wallclock = result.wallclock;
  report.basis_size = result.state.store.size();
  report.reduced_size = reduced_size;
  report.pairs_considered = result.state.pairs_considered;
  report.pairs_eliminated = result.state.pairs_eliminated;
  report.pairs_enqueued = result.state.pairs_enqueued;
  report.degrees = result.state.stats;
  report.rounds = aggregate_rounds(result.state.stats, result.state.rounds);

  std::vector<nanoseconds> reduce, genpairs;
  report.worker_busy.assign(result.workers, nanoseconds{0});
  for (const auto& s : report.degrees) {
    reduce.push_back(s.reduce_time);
    genpairs.push_back(s.genpairs_time);
    if (s.worker_id >= report.worker_busy.size()) {
      report.worker_busy.resize(s.worker_id + 1, nanoseconds{0});
    }
    report.worker_busy[s.worker_id] += s.reduce_time;
  }
  report.reduce = summarize(reduce);
  report.genpairs = summarize(genpairs);
  report.worker_busy_summary = summarize(report.worker_busy);
  return report;
}

std::string degree_csv_header() {
  return "workers,round,degree,spairs_in,zero_reductions,new_elements,"
         "reduce_ms,genpairs_ms,worker_id";
}

void write_degree_rows(std::ostream& out, const RunReport& report) {
  for (const auto& s : report.degrees) {
    out << report.workers << ',' << s.round << ',' << quoted(s.degree) << ','
        << s.spairs_in << ',' << s.zero_reductions << ',' << s.new_elements
        << ',' << ms(s.reduce_time) << ',' << ms(s.genpairs_time) << ','
        << s.worker_id << '\n';
  }
}

std::string round_csv_header() {
  return "workers,round,degrees,span_ms,reduce_max_ms,reduce_min_ms,"
         "reduce_mean_ms,genpairs_max_ms,genpairs_min_ms,genpairs_mean_ms,"
         "max_worker_phase_ms";
}

void write_round_rows(std::ostream& out, const RunReport& report) {
  for (const auto& r : report.rounds) {
    out << report.workers << ',' << r.round << ',' << r.degrees << ','
        << ms(r.span) << ',' << ms(r.reduce.max) << ',' << ms(r.reduce.min)
        << ',' << ms(r.reduce.mean) << ',' << ms(r.genpairs.max) << ','
        << ms(r.genpairs.min) << ',' << ms(r.genpairs.mean) << ','
        << ms(r.max_worker_phase) << '\n';
  }
}

std::string summary_csv_header() {
  return "workers,engine,wallclock_ms,rounds,degrees,reduce_total_ms,"
         "reduce_max_ms,reduce_min_ms,reduce_mean_ms,genpairs_total_ms,"
         "genpairs_max_ms,genpairs_min_ms,genpairs_mean_ms,worker_busy_max_ms,"
         "worker_busy_min_ms,worker_busy_mean_ms,basis_size,reduced_size";
}

void write_summary_row(std::ostream& out, const RunReport& report) {
  out << report.workers << ',' << report.engine << ',' << ms(report.wallclock)
      << ',' << report.rounds.size() << ',' << report.degrees.size() << ','
      << ms(report.reduce.total) << ',' << ms(report.reduce.max) << ','
      << ms(report.reduce.min) << ',' << ms(report.reduce.mean) << ','
      << ms(report.genpairs.total) << ',' << ms(report.genpairs.max) << ','
      << ms(report.genpairs.min) << ',' << ms(report.genpairs.mean) << ','
      << ms(report.worker_busy_summary.max) << ','
      << ms(report.worker_busy_summary.min) << ','
      << ms(report.worker_busy_summary.mean) << ',' << report.basis_size << ','
      << report.reduced_size << '\n';
}

std::string summary_text(const RunReport& report) {
  std::ostringstream out;
  out << "problem:          " << report.problem << '\n'
      << "engine:           " << report.engine << " (" << report.workers
      << (report.workers == 1 ? " worker" : " workers") << ")\n"
      << "strategy:         " << to_string(report.strategy) << '\n'
      << "criteria:         " << to_string(report.criteria) << '\n'
      << "wallclock:        " << ms(report.wallclock) << " ms\n"
      << "rounds:           " << report.rounds.size() << '\n'
      << "degrees:          " << report.degrees.size() << '\n'
      << "pairs considered: " << report.pairs_considered << " ("
      << report.pairs_eliminated << " eliminated by criteria, "
      << report.pairs_enqueued << " reduced)\n"
      << "basis size:       " << report.basis_size << '\n'
      << "reduced size:     " << report.reduced_size << '\n'
      << "reduction ms:     total " << ms(report.reduce.total) << ", max "
      << ms(report.reduce.max) << ", min " << ms(report.reduce.min)
      << ", mean " << ms(report.reduce.mean) << '\n'
      << "generation ms:    total " << ms(report.genpairs.total) << ", max "
      << ms(report.genpairs.max) << ", min " << ms(report.genpairs.min)
      << ", mean " << ms(report.genpairs.mean) << '\n'
      << "worker busy ms:   max " << ms(report.worker_busy_summary.max)
      << ", min " << ms(report.worker_busy_summary.min) << ", mean "
      << ms(report.worker_busy_summary.mean) << '\n';
  return out.str();
}

}  // namespace mgb
