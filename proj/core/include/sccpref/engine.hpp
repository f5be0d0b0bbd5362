#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>

#include "sccpref/argument_set.hpp"
#include "sccpref/base_pref.hpp"
#include "sccpref/cancellation.hpp"
#include "sccpref/framework.hpp"
#include "sccpref/labelling.hpp"
#include "sccpref/scc.hpp"
#include "sccpref/worker_pool.hpp"

namespace sccpref {

// Effect of the already-labelled components on a component S.
struct InfluencePair {
  ArgumentSet externally_defeated;  // O: some earlier attacker is in
  ArgumentSet externally_clean;     // I: every earlier attacker is out
};

// O and I for component `s`, where `prior` is the union of all components on
// earlier levels and `lab` labels (at least) every argument of `prior`.
// Attacks from inside `s`, or from outside `prior`, are ignored.
InfluencePair l_cond(const ArgumentationFramework& af, const ArgumentSet& s, const ArgumentSet& prior,
                     const Labelling& lab);

// E1 (x) E2 = { L1 u L2 | L1 in E1, L2 in E2 }. The two domains must be disjoint.
LabellingSet merge(const LabellingSet& e1, const LabellingSet& e2);

// Component index -> preferred labellings of that component in S n C, with no
// external influence. Filled once, then read-only.
using MemoTable = std::map<std::size_t, LabellingSet>;

MemoTable greedy_precompute(const ArgumentationFramework& af, const SccPartition& partition,
                            const LevelList& levels, const ArgumentSet& c, WorkerPool& pool,
                            const BasePrefOptions& base = {});

struct EngineOptions {
  std::size_t workers = 1;
  bool greedy = false;
  const CancellationToken* cancel = nullptr;
  OracleFactory oracle_factory;
  // Recompute the base function on every memo hit and fail on mismatch.
  bool shadow_check_memo = false;
};

struct EngineStats {
  std::uint64_t calls = 0;          // p_pref invocations, including recursive ones
  std::uint64_t tasks = 0;          // (component, prior labelling) evaluations
  std::uint64_t case_undecided = 0; // I empty
  std::uint64_t case_memo = 0;      // I == S, answered from the memo table
  std::uint64_t case_clean = 0;     // I == S without memo
  std::uint64_t case_base = 0;      // O empty, I != S
  std::uint64_t case_recursive = 0; // O and I both non-trivial
  std::uint64_t memo_entries = 0;
};

// SCC-recursive enumeration of preferred labellings. Levels of the
// condensation are processed in order; inside a level every (component,
// prior labelling) pair is an independent task on the worker pool.
class PreferredEngine {
 public:
  explicit PreferredEngine(EngineOptions options = {});

  // Preferred labellings of `af`.
  LabellingSet pref(const ArgumentationFramework& af);
  // Preferred labellings of `af` in `c`.
  LabellingSet p_pref(const ArgumentationFramework& af, const ArgumentSet& c);

  EngineStats stats() const;
  const EngineOptions& options() const noexcept { return options_; }

 private:
  LabellingSet evaluate_component(const ArgumentationFramework& af, const SccPartition& partition,
                                  std::size_t component, const ArgumentSet& prior, const Labelling& lab,
                                  const ArgumentSet& c, const MemoTable& memo);
  BasePrefOptions base_options() const;
  void checkpoint() const;

  EngineOptions options_;
  WorkerPool pool_;

  struct Counters {
    std::atomic<std::uint64_t> calls{0}, tasks{0}, case_undecided{0}, case_memo{0}, case_clean{0},
        case_base{0}, case_recursive{0}, memo_entries{0};
  };
  Counters counters_;
};

// Convenience wrapper around PreferredEngine::pref.
LabellingSet pref(const ArgumentationFramework& af, const EngineOptions& options = {});

}  // namespace sccpref
