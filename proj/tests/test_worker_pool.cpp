#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "sccpref/worker_pool.hpp"

namespace sccpref {
namespace {

TEST(WorkerPool, RunsEveryIndexOnce) {
  for (std::size_t workers : {1, 2, 4, 8}) {
    WorkerPool pool(workers);
    EXPECT_EQ(pool.workers(), workers);
    std::vector<std::atomic<int>> hits(1000);
    pool.parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (auto& h : hits) EXPECT_EQ(h.load(), 1);
    pool.parallel_for(0, [](std::size_t) { FAIL(); });
  }
}

TEST(WorkerPool, NestedCallsDoNotDeadlock) {
  WorkerPool pool(3);
  std::atomic<int> total{0};
  pool.parallel_for(8, [&](std::size_t) {
    pool.parallel_for(8, [&](std::size_t) {
      pool.parallel_for(4, [&](std::size_t) { ++total; });
    });
  });
  EXPECT_EQ(total.load(), 256);
}

TEST(WorkerPool, RethrowsTaskErrors) {
  WorkerPool pool(4);
  EXPECT_THROW(pool.parallel_for(100,
                                 [](std::size_t i) {
                                   if (i == 37) throw std::runtime_error("boom");
                                 }),
               std::runtime_error);
  // Still usable afterwards.
  std::atomic<int> n{0};
  pool.parallel_for(10, [&](std::size_t) { ++n; });
  EXPECT_EQ(n.load(), 10);
}

TEST(WorkerPool, ZeroWorkersIsClampedToOne) {
  WorkerPool pool(0);
  EXPECT_EQ(pool.workers(), 1u);
}

TEST(WorkerPool, ManyShortBatchesFromSeveralThreads) {
  WorkerPool pool(4);
  std::atomic<long> sum{0};
  std::vector<std::thread> callers;
  for (int t = 0; t < 4; ++t) {
    callers.emplace_back([&] {
      for (int r = 0; r < 200; ++r) pool.parallel_for(5, [&](std::size_t i) { sum += static_cast<long>(i); });
    });
  }
  for (auto& c : callers) c.join();
  EXPECT_EQ(sum.load(), 4L * 200 * 10);
}

}  // namespace
}  // namespace sccpref
