#pragma once

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "sccpref/framework.hpp"
#include "sccpref/ipc.hpp"
#include "sccpref/labelling.hpp"

namespace sccpref {

inline constexpr double kDefaultCutoffSeconds = 900.0;

// Worker count plus greedy flag, labelled P<workers>[G] (P1, P2, P2G, P4, P4G).
struct SolverConfig {
  std::size_t workers = 1;
  bool greedy = false;

  std::string label() const;
  // Throws ParameterError on anything but P<n> or P<n>G with n >= 1.
  static SolverConfig parse(std::string_view label);
  // Comma-separated list of labels.
  static std::vector<SolverConfig> parse_list(std::string_view labels);

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

struct BenchRecord {
  std::string instance;
  std::string config;
  RunStatus status = RunStatus::Crashed;
  double seconds = 0.0;
  std::optional<std::size_t> extensions;  // success only
};

// instance,config,status,seconds,extensions
void write_records_header(std::ostream& os);
void write_record(const BenchRecord& record, std::ostream& os);

struct SolveOutcome {
  BenchRecord record;
  std::optional<LabellingSet> result;  // success only
};

// Runs the engine under a cooperative deadline of `cutoff_seconds`. Wall time
// covers everything after parsing. Timeouts, allocation failures and any other
// exception are folded into the record's status.
SolveOutcome timed_solve(const ArgumentationFramework& af, const SolverConfig& config, double cutoff_seconds,
                         std::string instance);

// Fires `on_expiry` from a background thread if not disarmed before the
// deadline. Used as the hard stop behind the cooperative checks.
class Watchdog {
 public:
  Watchdog(std::chrono::steady_clock::duration budget, std::function<void()> on_expiry);
  ~Watchdog();

  Watchdog(const Watchdog&) = delete;
  Watchdog& operator=(const Watchdog&) = delete;

  void disarm();

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  bool disarmed_ = false;
  std::thread thread_;
};

// Grace period granted past the cutoff before the watchdog fires.
std::chrono::steady_clock::duration watchdog_grace(double cutoff_seconds);

struct ConfigSummary {
  std::string config;
  double ipc = 0.0;
  double success_pct = 0.0;
  double best_pct = 0.0;
  // Over instances at least one configuration solved: mean of this
  // configuration's successful runs, and mean with failures counted at cutoff.
  std::optional<double> avg_runtime_solved;
  std::optional<double> avg_runtime_cutoff;
  // max over commonly solved instances of T(P1) / T(config).
  std::optional<double> max_speedup_vs_p1;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  ScoreReport scores;
  std::vector<ConfigSummary> summary;
  double cutoff_seconds = kDefaultCutoffSeconds;
  bool timings_indicative = false;
};

// Aggregates records into IPC scores and the per-configuration summary.
BenchReport summarize(std::vector<BenchRecord> records, const std::vector<SolverConfig>& configs,
                      double cutoff_seconds);

struct BenchOptions {
  std::filesystem::path corpus;
  std::vector<SolverConfig> configs;
  double cutoff_seconds = kDefaultCutoffSeconds;
  // Instances run concurrently; anything above 1 marks timings as indicative.
  std::size_t jobs = 1;
  std::function<void(const BenchRecord&)> on_record;
};

// Every configuration on every *.apx file in the corpus (sorted by name).
// Throws std::runtime_error for a missing or empty corpus directory.
BenchReport run_bench(const BenchOptions& options);

void print_summary(const BenchReport& report, std::ostream& os);

}  // namespace sccpref
