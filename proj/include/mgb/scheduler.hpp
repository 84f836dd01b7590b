#pragma once

// Master/worker engine. The master owns the store and the pair queue; each
// worker receives one degree at a time together with an immutable snapshot
// of the store taken at the start of the round, reduces that bucket, and
// reports the survivors. Concurrently running degrees always form an
// antichain, so their reductions cannot see each other's results.

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "mgb/buchberger.hpp"
#include "mgb/engine.hpp"

namespace mgb {

/// Unbounded blocking MPSC/MPMC queue.
template <typename T>
class Channel {
 public:
  void send(T value) {
    {
      std::lock_guard lock(mutex_);
      queue_.push_back(std::move(value));
    }
    ready_.notify_one();
  }

  T receive() {
    std::unique_lock lock(mutex_);
    ready_.wait(lock, [&] { return !queue_.empty(); });
    T value = std::move(queue_.front());
    queue_.pop_front();
    return value;
  }

 private:
  std::mutex mutex_;
  std::condition_variable ready_;
  std::deque<T> queue_;
};

struct Dispatch {
  Multidegree degree;
  std::vector<SPair> pairs;
  std::shared_ptr<const BasisStore> snapshot;
};

struct Finish {};

using WorkerMessage = std::variant<Dispatch, Finish>;

struct Done {
  std::size_t worker = 0;
  Multidegree degree;
  std::vector<Polynomial> new_elements;
  DegreeStats stats;
};

struct Failed {
  std::size_t worker = 0;
  std::string what;
};

using MasterMessage = std::variant<Done, Failed>;

/// Worker loop: returns on Finish; answers every Dispatch with Done, or with
/// Failed (and returns) if processing throws.
void run_worker(std::size_t worker_id, const PolyRing& ring,
                Channel<WorkerMessage>& inbox, Channel<MasterMessage>& outbox);

/// Runs the master with `workers` worker threads. Throws WorkerFailure if a
/// worker fails; all threads are joined before returning or throwing.
EngineResult run_master(const PolyRing& ring, const GradingMap& grading,
                        std::vector<Polynomial> generators, std::size_t workers,
                        const EngineOptions& options);

/// Same, starting from an existing state (e.g. a checkpoint).
EngineResult continue_master(const PolyRing& ring, EngineState state,
                             std::size_t workers, const EngineOptions& options);

}  // namespace mgb
