#include "sccpref/worker_pool.hpp"

#include <algorithm>
#include <atomic>
#include <exception>

namespace sccpref {

struct WorkerPool::Batch {
  const std::function<void(std::size_t)>* fn;
  std::size_t n;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  bool has_work() const { return next.load(std::memory_order_relaxed) < n; }
};

WorkerPool::WorkerPool(std::size_t workers) {
  const std::size_t extra = workers > 1 ? workers - 1 : 0;
  threads_.reserve(extra);
  for (std::size_t i = 0; i < extra; ++i) threads_.emplace_back([this] { worker_loop(); });
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  cv_.notify_all();
  for (auto& t : threads_) t.join();
}

bool WorkerPool::run_one(Batch& batch) {
  const std::size_t i = batch.next.fetch_add(1, std::memory_order_relaxed);
  if (i >= batch.n) return false;
  run_claimed(batch, i);
  return true;
}

void WorkerPool::run_claimed(Batch& batch, std::size_t i) {
  if (!batch.failed.load(std::memory_order_relaxed)) {
    try {
      (*batch.fn)(i);
    } catch (...) {
      std::lock_guard lock(batch.error_mutex);
      if (!batch.error) batch.error = std::current_exception();
      batch.failed.store(true, std::memory_order_relaxed);
    }
  }
  if (batch.done.fetch_add(1, std::memory_order_acq_rel) + 1 == batch.n) {
    std::lock_guard lock(mutex_);
    cv_.notify_all();
  }
}

bool WorkerPool::claim_locked(Claim& claim) {
  // Most recent first: nested batches are usually the ones blocking a waiter.
  // Claiming under the lock keeps the batch alive until the task reports done.
  for (auto it = active_.rbegin(); it != active_.rend(); ++it) {
    if (!(*it)->has_work()) continue;
    const std::size_t i = (*it)->next.fetch_add(1, std::memory_order_relaxed);
    if (i < (*it)->n) {
      claim = {*it, i};
      return true;
    }
  }
  return false;
}

void WorkerPool::worker_loop() {
  for (;;) {
    Claim claim;
    {
      std::unique_lock lock(mutex_);
      bool got = false;
      cv_.wait(lock, [&] { return stopping_ || (got = claim_locked(claim)); });
      if (!got) return;
    }
    run_claimed(*claim.batch, claim.index);
  }
}

void WorkerPool::parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (threads_.empty() || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  Batch batch;
  batch.fn = &fn;
  batch.n = n;
  {
    std::lock_guard lock(mutex_);
    active_.push_back(&batch);
  }
  cv_.notify_all();

  while (run_one(batch)) {
  }
  for (;;) {
    Claim other;
    {
      std::unique_lock lock(mutex_);
      bool got = false;
      cv_.wait(lock, [&] { return batch.done.load(std::memory_order_acquire) == n || (got = claim_locked(other)); });
      if (!got) {
        active_.erase(std::find(active_.begin(), active_.end(), &batch));
        break;
      }
    }
    run_claimed(*other.batch, other.index);
  }

  if (batch.error) std::rethrow_exception(batch.error);
}

}  // namespace sccpref
