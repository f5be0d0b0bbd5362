#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sccpref {

// Fixed-size pool executing index batches. A caller of parallel_for works on
// its own batch and, while waiting for stragglers, on any other batch in
// flight, so nested parallel_for calls from inside tasks cannot deadlock.
// With one worker everything runs inline on the calling thread.
class WorkerPool {
 public:
  explicit WorkerPool(std::size_t workers);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  std::size_t workers() const noexcept { return threads_.size() + 1; }

  // Runs fn(0..n-1) and returns once all calls finished. The first exception
  // thrown by a task is rethrown here; unstarted tasks are skipped after it.
  void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

 private:
  struct Batch;
  struct Claim {
    Batch* batch = nullptr;
    std::size_t index = 0;
  };

  bool run_one(Batch& batch);
  void run_claimed(Batch& batch, std::size_t index);
  bool claim_locked(Claim& claim);
  void worker_loop();

  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable cv_;
  std::vector<Batch*> active_;
  bool stopping_ = false;
};

}  // namespace sccpref
