#include "sccpref/ipc.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sccpref {

std::string_view to_string(RunStatus status) noexcept {
  switch (status) {
    case RunStatus::Success:
      return "success";
    case RunStatus::Timeout:
      return "timeout";
    case RunStatus::OutOfMemory:
      return "out-of-memory";
    case RunStatus::Crashed:
      return "crashed";
  }
  return "crashed";
}

std::optional<RunStatus> parse_run_status(std::string_view text) noexcept {
  for (auto s : {RunStatus::Success, RunStatus::Timeout, RunStatus::OutOfMemory, RunStatus::Crashed}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

double ipc_raw_score(const RunOutcome& run, double best_seconds) {
  if (run.status != RunStatus::Success) return 0.0;
  if (run.seconds < kInstantSeconds) return 1.0;
  return 1.0 / (1.0 + std::log10(run.seconds / best_seconds));
}

ScoreReport ipc_score(const TimingTable& times) {
  std::set<std::string> configs;
  for (const auto& [instance, row] : times) {
    for (const auto& [config, outcome] : row) configs.insert(config);
  }

  ScoreReport report;
  for (const auto& c : configs) report.normalised[c] = 0.0;
  for (const auto& [instance, row] : times) {
    std::optional<double> best;
    for (const auto& [config, outcome] : row) {
      if (outcome.status == RunStatus::Success) best = best ? std::min(*best, outcome.seconds) : outcome.seconds;
    }
    auto& raw_row = report.raw[instance];
    for (const auto& c : configs) {
      const auto it = row.find(c);
      const double raw = (it == row.end() || !best) ? 0.0 : ipc_raw_score(it->second, *best);
      raw_row[c] = raw;
      report.normalised[c] += raw;
    }
  }
  if (!times.empty()) {
    for (auto& [c, total] : report.normalised) total = 100.0 * total / static_cast<double>(times.size());
  }
  return report;
}

}  // namespace sccpref
