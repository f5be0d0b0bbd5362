#pragma once

#include <atomic>
#include <chrono>
#include <optional>

#include "sccpref/errors.hpp"

namespace sccpref {

// Cooperative cancellation shared between a caller and the solving threads:
// an optional wall-clock deadline plus an explicit cancel flag.
class CancellationToken {
 public:
  using Clock = std::chrono::steady_clock;

  CancellationToken() = default;
  explicit CancellationToken(Clock::time_point deadline) : deadline_(deadline) {}

  static CancellationToken after(std::chrono::duration<double> budget) {
    return CancellationToken(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget));
  }

  void cancel() noexcept { cancelled_.store(true, std::memory_order_relaxed); }

  bool expired() const noexcept {
    if (cancelled_.load(std::memory_order_relaxed)) return true;
    if (deadline_ && Clock::now() >= *deadline_) {
      cancelled_.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  void throw_if_expired() const {
    if (expired()) throw TimeoutError();
  }

 private:
  std::optional<Clock::time_point> deadline_;
  mutable std::atomic<bool> cancelled_{false};
};

}  // namespace sccpref
