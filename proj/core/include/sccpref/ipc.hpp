#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sccpref {

enum class RunStatus { Success, Timeout, OutOfMemory, Crashed };

std::string_view to_string(RunStatus status) noexcept;
std::optional<RunStatus> parse_run_status(std::string_view text) noexcept;

struct RunOutcome {
  RunStatus status = RunStatus::Crashed;
  double seconds = 0.0;
};

// Runtimes strictly below this always score the maximum.
inline constexpr double kInstantSeconds = 0.01;

// 0 on failure, 1 below kInstantSeconds, otherwise 1 / (1 + log10(T / T*)).
double ipc_raw_score(const RunOutcome& run, double best_seconds);

// instance -> configuration -> outcome
using TimingTable = std::map<std::string, std::map<std::string, RunOutcome>>;

struct ScoreReport {
  // configuration -> 100 * (sum of raw scores) / (number of instances)
  std::map<std::string, double> normalised;
  // instance -> configuration -> raw score in [0, 1]
  std::map<std::string, std::map<std::string, double>> raw;
};

// T* is the best successful time per instance. A configuration missing from
// an instance's row scores 0 there, as does every configuration on an
// instance nobody solved.
ScoreReport ipc_score(const TimingTable& times);

}  // namespace sccpref
