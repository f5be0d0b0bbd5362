#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sccpref/apx.hpp"
#include "sccpref/bench.hpp"
#include "sccpref/complete_encoding.hpp"
#include "sccpref/corpus.hpp"
#include "sccpref/errors.hpp"
#include "sccpref/generator.hpp"
#include "sccpref/grounded.hpp"
#include "sccpref/rng.hpp"

namespace sccpref::cli {

namespace {

namespace fs = std::filesystem;

struct SolveFlags {
  std::string input;
  std::string format = "apx";
  std::size_t workers = 1;
  bool greedy = false;
  double timeout_secs = kDefaultCutoffSeconds;
  std::string output = "-";
  std::string records;
  std::string dump_cnf;
  bool grounded_only = false;
};

struct GenFlags {
  std::vector<std::size_t> scc_count{1};
  std::size_t args_min = 1;
  std::size_t args_max = 1;
  std::vector<double> p_intra{0.0};
  std::vector<double> p_inter{0.0};
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string out_dir;
  std::string prefix = "af";
  bool self_attack = false;
  std::string manifest;
};

struct BenchFlags {
  std::string corpus;
  std::string configs = "P1,P2,P2G,P4,P4G";
  double timeout_secs = kDefaultCutoffSeconds;
  std::string records;
  std::string output = "-";
  std::size_t jobs = 1;
};

// Opens --output, falling back to `fallback` for "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw std::runtime_error("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// Appends to a records CSV, writing the header when the file is new or empty.
std::unique_ptr<std::ofstream> open_records(const std::string& path) {
  if (path.empty()) return nullptr;
  std::error_code ec;
  const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
  auto out = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::app);
  if (!*out) throw std::runtime_error("cannot write " + path);
  if (fresh) write_records_header(*out);
  return out;
}

int exit_code_for(RunStatus status) {
  switch (status) {
    case RunStatus::Success:
      return kOk;
    case RunStatus::Timeout:
      return kTimeout;
    default:
      return kInternalError;
  }
}

int run_solve(const SolveFlags& f, std::ostream& out, std::ostream& err) {
  if (f.format != "apx") {
    err << "error: unsupported format '" << f.format << "'\n";
    return kParseError;
  }
  if (f.workers == 0) {
    err << "error: --workers must be at least 1\n";
    return kParseError;
  }
  if (!(f.timeout_secs > 0)) {
    err << "error: --timeout-secs must be positive\n";
    return kParseError;
  }

  ArgumentationFramework af;
  try {
    af = read_apx_file(f.input);
  } catch (const ParseError& e) {
    err << f.input << ": " << e.what() << '\n';
    return kParseError;
  }

  if (!f.dump_cnf.empty()) {
    std::ofstream cnf(f.dump_cnf, std::ios::binary);
    if (!cnf) {
      err << "error: cannot write " << f.dump_cnf << '\n';
      return kInternalError;
    }
    encode_complete_in(af, af.arguments()).write_dimacs(cnf);
  }

  const std::string instance = fs::path(f.input).filename().string();
  auto records = open_records(f.records);

  if (f.grounded_only) {
    const auto start = std::chrono::steady_clock::now();
    GroundedOutcome g = grounded_in(af, af.arguments());
    LabellingSet result{g.decided.united(Labelling::uniform(g.undecided, Label::Undec))};
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Sink sink(f.output, out);
    print_extensions(result, af, sink.get());
    if (records) write_record({instance, "grounded", RunStatus::Success, seconds, 1}, *records);
    return kOk;
  }

  const SolverConfig config{f.workers, f.greedy};
  Watchdog watchdog(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(f.timeout_secs)) +
                        watchdog_grace(f.timeout_secs),
                    [] {
                      std::fputs("timeout: solver did not stop at the deadline\n", stderr);
                      std::_Exit(kTimeout);
                    });
  SolveOutcome outcome = timed_solve(af, config, f.timeout_secs, instance);
  watchdog.disarm();

  if (records) write_record(outcome.record, *records);
  if (outcome.record.status != RunStatus::Success) {
    err << instance << ": " << to_string(outcome.record.status) << " after " << outcome.record.seconds << " s\n";
    return exit_code_for(outcome.record.status);
  }
  Sink sink(f.output, out);
  print_extensions(*outcome.result, af, sink.get());
  return kOk;
}

int run_gen(const GenFlags& f, std::ostream& out, std::ostream& err) {
  if (f.out_dir.empty()) {
    err << "error: --out is required\n";
    return kParseError;
  }
  if (!f.manifest.empty()) {
    Manifest m;
    try {
      m = read_manifest_file(f.manifest);
    } catch (const ParseError& e) {
      err << f.manifest << ": " << e.what() << '\n';
      return kParseError;
    }
    regenerate_corpus(m, f.out_dir);
    out << "regenerated " << m.entries.size() << " instances in " << f.out_dir << '\n';
    return kOk;
  }

  // Instance i cycles through the listed values; seeds are drawn from a
  // stream seeded with --seed so that one number pins the whole corpus.
  SplitMix64 seeds(f.seed);
  std::vector<GenParams> params;
  for (std::size_t i = 0; i < f.count; ++i) {
    GenParams p;
    p.scc_count = f.scc_count[i % f.scc_count.size()];
    p.min_args = f.args_min;
    p.max_args = f.args_max;
    p.p_intra = f.p_intra[i % f.p_intra.size()];
    p.p_inter = f.p_inter[i % f.p_inter.size()];
    p.seed = seeds.next();
    p.singleton_self_attack = f.self_attack;
    try {
      validate(p);
    } catch (const ParameterError& e) {
      err << "error: " << e.what() << '\n';
      return kParseError;
    }
    params.push_back(p);
  }
  Manifest m = write_corpus(params, f.out_dir, f.prefix);
  out << "wrote " << m.entries.size() << " instances to " << f.out_dir << '\n';
  return kOk;
}

int run_bench(const BenchFlags& f, std::ostream& out, std::ostream& err) {
  BenchOptions options;
  try {
    options.configs = SolverConfig::parse_list(f.configs);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  if (!fs::is_directory(f.corpus)) {
    err << "error: corpus directory " << f.corpus << " not found\n";
    return kParseError;
  }
  options.corpus = f.corpus;
  options.cutoff_seconds = f.timeout_secs;
  options.jobs = f.jobs == 0 ? 1 : f.jobs;
  auto records = open_records(f.records);
  options.on_record = [&](const BenchRecord& r) {
    if (records) {
      write_record(r, *records);
      records->flush();
    }
    err << r.instance << ' ' << r.config << ' ' << to_string(r.status) << ' ' << r.seconds << '\n';
  };
  BenchReport report = sccpref::run_bench(options);
  Sink sink(f.output, out);
  print_summary(report, sink.get());
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Preferred-semantics enumeration over SCC levels"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* s = app.add_subcommand("solve", "Enumerate preferred extensions of one framework");
  s->add_option("-i,--input", solve.input, "APX file")->required();
  s->add_option("--format", solve.format, "Input format")->capture_default_str();
  s->add_option("--workers", solve.workers, "Worker threads")->capture_default_str();
  s->add_flag("--greedy", solve.greedy, "Precompute uninfluenced components");
  s->add_option("--timeout-secs", solve.timeout_secs, "Cutoff in seconds")->capture_default_str();
  s->add_option("--output", solve.output, "Output path, - for stdout")->capture_default_str();
  s->add_option("--records", solve.records, "Append a CSV run record here");
  s->add_option("--dump-cnf", solve.dump_cnf, "Write the complete-labelling CNF in DIMACS form");
  s->add_flag("--grounded", solve.grounded_only, "Print only the grounded extension");

  GenFlags gen;
  auto* g = app.add_subcommand("gen", "Generate a corpus of random frameworks");
  g->add_option("--scc-count", gen.scc_count, "Components per instance (list cycles)")->delimiter(',');
  g->add_option("--args-min", gen.args_min, "Smallest component")->capture_default_str();
  g->add_option("--args-max", gen.args_max, "Largest component")->capture_default_str();
  g->add_option("--p-intra", gen.p_intra, "Extra intra-component attack probability (list cycles)")->delimiter(',');
  g->add_option("--p-inter", gen.p_inter, "Forward inter-component attack probability (list cycles)")->delimiter(',');
  g->add_option("--seed", gen.seed, "Base seed")->capture_default_str();
  g->add_option("--count", gen.count, "Number of instances")->capture_default_str();
  g->add_option("--out", gen.out_dir, "Output directory");
  g->add_option("--prefix", gen.prefix, "File name prefix")->capture_default_str();
  g->add_flag("--self-attack-singletons", gen.self_attack, "Singleton components attack themselves");
  g->add_option("--manifest", gen.manifest, "Regenerate the corpus listed in this manifest");

  BenchFlags bench;
  auto* b = app.add_subcommand("bench", "Run configurations over a corpus and score them");
  b->add_option("--corpus", bench.corpus, "Directory of APX files")->required();
  b->add_option("--configs", bench.configs, "Comma-separated P<n>[G] labels")->capture_default_str();
  b->add_option("--timeout-secs", bench.timeout_secs, "Cutoff per run in seconds")->capture_default_str();
  b->add_option("--records", bench.records, "Append CSV run records here");
  b->add_option("--output", bench.output, "Summary path, - for stdout")->capture_default_str();
  b->add_option("--jobs", bench.jobs, "Instances run concurrently (timings become indicative)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (s->parsed()) return run_solve(solve, out, err);
    if (g->parsed()) return run_gen(gen, out, err);
    return run_bench(bench, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace sccpref::cli
