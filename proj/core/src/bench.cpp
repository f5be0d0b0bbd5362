#include "sccpref/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <new>
#include <set>

#include "sccpref/apx.hpp"
#include "sccpref/cancellation.hpp"
#include "sccpref/engine.hpp"
#include "sccpref/errors.hpp"

namespace sccpref {

std::string SolverConfig::label() const { return "P" + std::to_string(workers) + (greedy ? "G" : ""); }

SolverConfig SolverConfig::parse(std::string_view label) {
  auto bad = [&] { return ParameterError("bad configuration '" + std::string(label) + "' (expected P<n> or P<n>G)"); };
  if (label.size() < 2 || label[0] != 'P') throw bad();
  SolverConfig c;
  std::string_view digits = label.substr(1);
  if (digits.back() == 'G') {
    c.greedy = true;
    digits.remove_suffix(1);
  }
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), c.workers);
  if (ec != std::errc{} || end != digits.data() + digits.size() || c.workers == 0) throw bad();
  return c;
}

std::vector<SolverConfig> SolverConfig::parse_list(std::string_view labels) {
  std::vector<SolverConfig> out;
  while (!labels.empty()) {
    const auto comma = labels.find(',');
    out.push_back(parse(labels.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    labels.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ParameterError("empty configuration list");
  return out;
}

void write_records_header(std::ostream& os) { os << "instance,config,status,seconds,extensions\n"; }

void write_record(const BenchRecord& r, std::ostream& os) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.6f", r.seconds);
  os << r.instance << ',' << r.config << ',' << to_string(r.status) << ',' << secs << ',';
  if (r.extensions) os << *r.extensions;
  os << '\n';
}

SolveOutcome timed_solve(const ArgumentationFramework& af, const SolverConfig& config, double cutoff_seconds,
                         std::string instance) {
  SolveOutcome out;
  out.record.instance = std::move(instance);
  out.record.config = config.label();
  const auto start = std::chrono::steady_clock::now();
  const CancellationToken token = CancellationToken::after(std::chrono::duration<double>(cutoff_seconds));
  try {
    EngineOptions options;
    options.workers = config.workers;
    options.greedy = config.greedy;
    options.cancel = &token;
    LabellingSet result = pref(af, options);
    out.record.status = RunStatus::Success;
    out.record.extensions = result.size();
    out.result = std::move(result);
  } catch (const TimeoutError&) {
    out.record.status = RunStatus::Timeout;
  } catch (const std::bad_alloc&) {
    out.record.status = RunStatus::OutOfMemory;
  } catch (const std::exception& e) {
    std::cerr << "run " << out.record.instance << '/' << out.record.config << " crashed: " << e.what() << '\n';
    out.record.status = RunStatus::Crashed;
  }
  out.record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.record.status == RunStatus::Success && out.record.seconds > cutoff_seconds) {
    out.record.status = RunStatus::Timeout;
    out.record.extensions.reset();
    out.result.reset();
  }
  return out;
}

Watchdog::Watchdog(std::chrono::steady_clock::duration budget, std::function<void()> on_expiry) {
  const auto deadline = std::chrono::steady_clock::now() + budget;
  thread_ = std::thread([this, deadline, fire = std::move(on_expiry)] {
    std::unique_lock lock(mutex_);
    if (!cv_.wait_until(lock, deadline, [this] { return disarmed_; })) {
      lock.unlock();
      fire();
    }
  });
}

Watchdog::~Watchdog() {
  disarm();
  if (thread_.joinable()) thread_.join();
}

void Watchdog::disarm() {
  {
    std::lock_guard lock(mutex_);
    disarmed_ = true;
  }
  cv_.notify_all();
}

std::chrono::steady_clock::duration watchdog_grace(double cutoff_seconds) {
  const double grace = std::max(5.0, 0.1 * cutoff_seconds);
  return std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(grace));
}

BenchReport summarize(std::vector<BenchRecord> records, const std::vector<SolverConfig>& configs,
                      double cutoff_seconds) {
  BenchReport report;
  report.cutoff_seconds = cutoff_seconds;

  TimingTable table;
  for (const auto& r : records) table[r.instance][r.config] = {r.status, r.seconds};
  report.scores = ipc_score(table);

  const std::string p1 = SolverConfig{1, false}.label();
  const double instances = static_cast<double>(table.size());
  for (const auto& cfg : configs) {
    const std::string label = cfg.label();
    ConfigSummary s;
    s.config = label;
    if (auto it = report.scores.normalised.find(label); it != report.scores.normalised.end()) s.ipc = it->second;

    std::size_t success = 0, best = 0, solved_any = 0, solved_runs = 0;
    double solved_sum = 0.0, cutoff_sum = 0.0;
    for (const auto& [instance, row] : table) {
      std::optional<double> fastest;
      for (const auto& [c, o] : row) {
        if (o.status == RunStatus::Success) fastest = fastest ? std::min(*fastest, o.seconds) : o.seconds;
      }
      const auto mine = row.find(label);
      const bool ok = mine != row.end() && mine->second.status == RunStatus::Success;
      if (ok) ++success;
      if (ok && fastest && mine->second.seconds == *fastest) ++best;
      if (fastest) {
        ++solved_any;
        if (ok) {
          ++solved_runs;
          solved_sum += mine->second.seconds;
          cutoff_sum += mine->second.seconds;
        } else {
          cutoff_sum += cutoff_seconds;
        }
      }
      if (label != p1 && ok) {
        const auto base = row.find(p1);
        if (base != row.end() && base->second.status == RunStatus::Success && mine->second.seconds > 0.0) {
          const double ratio = base->second.seconds / mine->second.seconds;
          s.max_speedup_vs_p1 = s.max_speedup_vs_p1 ? std::max(*s.max_speedup_vs_p1, ratio) : ratio;
        }
      }
    }
    if (instances > 0) {
      s.success_pct = 100.0 * static_cast<double>(success) / instances;
      s.best_pct = 100.0 * static_cast<double>(best) / instances;
    }
    if (solved_runs > 0) s.avg_runtime_solved = solved_sum / static_cast<double>(solved_runs);
    if (solved_any > 0) s.avg_runtime_cutoff = cutoff_sum / static_cast<double>(solved_any);
    report.summary.push_back(std::move(s));
  }
  report.records = std::move(records);
  return report;
}

BenchReport run_bench(const BenchOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(options.corpus)) throw std::runtime_error("corpus directory not found: " + options.corpus.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(options.corpus)) {
    if (entry.is_regular_file() && entry.path().extension() == ".apx") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no .apx instances in " + options.corpus.string());
  if (options.configs.empty()) throw ParameterError("no configurations to run");

  struct Job {
    std::size_t file;
    SolverConfig config;
  };
  std::vector<Job> jobs;
  for (std::size_t f = 0; f < files.size(); ++f) {
    for (const auto& c : options.configs) jobs.push_back({f, c});
  }

  std::vector<std::optional<ArgumentationFramework>> parsed(files.size());
  std::mutex parse_mutex, record_mutex;
  std::vector<BenchRecord> records(jobs.size());

  auto run_job = [&](std::size_t j) {
    const Job& job = jobs[j];
    const ArgumentationFramework* af;
    {
      std::lock_guard lock(parse_mutex);
      if (!parsed[job.file]) parsed[job.file] = read_apx_file(files[job.file]);
      af = &*parsed[job.file];
    }
    const std::string name = files[job.file].filename().string();
    Watchdog watchdog(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(options.cutoff_seconds)) +
                          watchdog_grace(options.cutoff_seconds),
                      [name] {
                        std::cerr << "watchdog: " << name << " ignored its deadline, aborting\n";
                        std::_Exit(3);
                      });
    SolveOutcome out = timed_solve(*af, job.config, options.cutoff_seconds, name);
    watchdog.disarm();
    std::lock_guard lock(record_mutex);
    records[j] = std::move(out.record);
    if (options.on_record) options.on_record(records[j]);
  };

  const std::size_t workers = std::max<std::size_t>(1, options.jobs);
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) run_job(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t t = 0; t < workers; ++t) {
      threads.emplace_back([&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
          try {
            run_job(j);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }

  BenchReport report = summarize(std::move(records), options.configs, options.cutoff_seconds);
  report.timings_indicative = workers > 1;
  return report;
}

void print_summary(const BenchReport& report, std::ostream& os) {
  auto opt = [](const std::optional<double>& v, int precision) {
    if (!v) return std::string("--");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", precision, *v);
    return std::string(buf);
  };
  std::set<std::string> instances;
  for (const auto& r : report.records) instances.insert(r.instance);
  os << "instances: " << instances.size() << "  cutoff: " << report.cutoff_seconds << " s";
  if (report.timings_indicative) os << "  (parallel dispatch: timings indicative)";
  os << '\n';
  os << std::left << std::setw(8) << "config" << std::right << std::setw(10) << "IPC" << std::setw(11) << "%success"
     << std::setw(9) << "%best" << std::setw(14) << "avg(solved)" << std::setw(14) << "avg(cutoff)"
     << std::setw(12) << "speedup" << '\n';
  for (const auto& s : report.summary) {
    os << std::left << std::setw(8) << s.config << std::right << std::setw(10) << opt(s.ipc, 1) << std::setw(11)
       << opt(s.success_pct, 1) << std::setw(9) << opt(s.best_pct, 1) << std::setw(14)
       << opt(s.avg_runtime_solved, 3) << std::setw(14) << opt(s.avg_runtime_cutoff, 3) << std::setw(12)
       << opt(s.max_speedup_vs_p1, 2) << '\n';
  }
}

}  // namespace sccpref
