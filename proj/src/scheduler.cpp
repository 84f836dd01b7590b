#include "mgb/scheduler.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "mgb/errors.hpp"

namespace mgb {

using Clock = std::chrono::steady_clock;

void run_worker(std::size_t worker_id, const PolyRing& ring,
                Channel<WorkerMessage>& inbox, Channel<MasterMessage>& outbox) {
  for (;;) {
    WorkerMessage message = inbox.receive();
    if (std::holds_alternative<Finish>(message)) return;
    auto& task = std::get<Dispatch>(message);
    try {
      if (!task.snapshot) throw WorkerFailure("dispatch without a snapshot");
      BucketResult r =
          reduce_bucket(ring, task.degree, std::move(task.pairs), *task.snapshot);
      r.stats.worker_id = worker_id;
      outbox.send(Done{worker_id, std::move(task.degree),
                       std::move(r.new_elements), std::move(r.stats)});
    } catch (const std::exception& e) {
      outbox.send(Failed{worker_id, e.what()});
      return;
    }
  }
}

namespace {

// Owns the worker threads. Destruction broadcasts Finish and joins, so every
// exit path of the master shuts the workers down.
class WorkerPool {
 public:
  WorkerPool(std::size_t workers, const PolyRing& ring) {
    inboxes_.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      inboxes_.push_back(std::make_unique<Channel<WorkerMessage>>());
    }
    for (std::size_t w = 0; w < workers; ++w) {
      threads_.emplace_back(run_worker, w, std::cref(ring),
                            std::ref(*inboxes_[w]), std::ref(outbox_));
    }
  }
  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;
  ~WorkerPool() { shutdown(); }

  void send(std::size_t worker, WorkerMessage message) {
    inboxes_.at(worker)->send(std::move(message));
  }
  MasterMessage receive() { return outbox_.receive(); }

  void shutdown() {
    if (threads_.empty()) return;
    for (auto& inbox : inboxes_) inbox->send(Finish{});
    for (auto& t : threads_) t.join();
    threads_.clear();
  }

 private:
  std::vector<std::unique_ptr<Channel<WorkerMessage>>> inboxes_;
  Channel<MasterMessage> outbox_;
  std::vector<std::thread> threads_;
};

}  // namespace

EngineResult run_master(const PolyRing& ring, const GradingMap& grading,
                        std::vector<Polynomial> generators, std::size_t workers,
                        const EngineOptions& options) {
  const auto start = Clock::now();
  EngineState state =
      seed_state(ring, grading, std::move(generators), options.criteria);
  EngineResult result =
      continue_master(ring, std::move(state), workers, options);
  result.wallclock = Clock::now() - start;
  return result;
}

EngineResult continue_master(const PolyRing& ring, EngineState state,
                             std::size_t workers, const EngineOptions& options) {
  if (workers == 0) throw UsageError("the scheduler needs at least one worker");
  const auto start = Clock::now();
  EngineResult result;
  result.engine = "parallel";
  result.workers = workers;

  ScheduleAudit audit;
  WorkerPool pool(workers, ring);
  std::deque<std::size_t> idle;
  for (std::size_t w = 0; w < workers; ++w) idle.push_back(w);
  std::deque<Multidegree> waiting;
  std::map<std::size_t, Multidegree> in_flight;
  std::vector<Multidegree> running;
  std::shared_ptr<const BasisStore> snapshot;
  Clock::time_point round_start;
  std::size_t round_degrees = 0;
  bool round_open = false;

  for (;;) {
    if (!waiting.empty() && !idle.empty()) {
      Multidegree degree = std::move(waiting.front());
      waiting.pop_front();
      std::size_t worker = idle.front();
      idle.pop_front();
      audit.on_dispatch(degree, running, state.pending);
      std::vector<SPair> pairs = state.pending.take(degree);
      running.push_back(degree);
      in_flight.emplace(worker, degree);
      pool.send(worker, Dispatch{std::move(degree), std::move(pairs), snapshot});
    } else if (!running.empty()) {
      MasterMessage message = pool.receive();
      if (auto* failed = std::get_if<Failed>(&message)) {
        throw WorkerFailure("worker " + std::to_string(failed->worker) +
                            " failed: " + failed->what);
      }
      Done& done = std::get<Done>(message);
      auto it = in_flight.find(done.worker);
      if (it == in_flight.end() || it->second != done.degree) {
        throw WorkerFailure("worker " + std::to_string(done.worker) +
                            " reported an unexpected degree " +
                            to_string(done.degree));
      }
      in_flight.erase(it);
      running.erase(std::find(running.begin(), running.end(), done.degree));
      idle.push_back(done.worker);

      DegreeStats stats = std::move(done.stats);
      stats.round = state.round;
      merge_elements(state, std::move(done.new_elements), options.criteria,
                     &stats.genpairs_time, &audit);
      state.stats.push_back(std::move(stats));
    } else if (waiting.empty()) {
      if (round_open) {
        state.rounds.push_back(
            {state.round, round_degrees, Clock::now() - round_start});
        round_open = false;
        if (options.checkpoint) save_checkpoint(*options.checkpoint, ring, state);
      }
      if (state.pending.empty()) break;
      if (options.stop_after_rounds &&
          state.round >= *options.stop_after_rounds) {
        pool.shutdown();
        result.wallclock = Clock::now() - start;
        result.state = std::move(state);
        return result;
      }
      round_start = Clock::now();
      ++state.round;
      std::vector<Multidegree> plan = round_plan(state.pending, options.strategy);
      audit.on_round(plan);
      round_degrees = plan.size();
      waiting.assign(plan.begin(), plan.end());
      snapshot = state.store.snapshot();
      round_open = true;
    } else {
      // Waiting degrees, no idle worker and nothing running cannot happen:
      // idle and running always account for every worker.
      throw InvariantViolation("master loop made no progress");
    }
  }

  pool.shutdown();
  result.completed = true;
  result.wallclock = Clock::now() - start;
  result.state = std::move(state);
  return result;
}

}  // namespace mgb
