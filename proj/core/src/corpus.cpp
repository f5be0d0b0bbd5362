#include "sccpref/corpus.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "sccpref/apx.hpp"
#include "sccpref/errors.hpp"
#include "sccpref/rng.hpp"

namespace sccpref {

namespace {

constexpr std::string_view kFormatTag = "# sccpref-manifest v1 rng=";

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw InternalError("cannot format probability");
  return std::string(buf, end);
}

template <typename T>
T parse_number(std::string_view s, std::size_t line, const char* what) {
  T v{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

ManifestEntry build_instance(const GenParams& params, const std::string& filename,
                             const std::filesystem::path& directory) {
  const ArgumentationFramework af = generate(params);
  write_text_file(directory / filename, to_apx(af));
  return {filename, params, af.size(), af.attack_count()};
}

void write_manifest_file(const Manifest& manifest, const std::filesystem::path& directory) {
  std::ostringstream os;
  write_manifest(manifest, os);
  write_text_file(directory / kManifestName, os.str());
}

}  // namespace

void write_manifest(const Manifest& manifest, std::ostream& os) {
  os << kFormatTag << SplitMix64::kAlgorithm << '\n';
  os << "# filename seed scc_count args_per_scc p_intra p_inter self_attack arguments attacks\n";
  for (const auto& e : manifest.entries) {
    const auto& p = e.params;
    os << e.filename << ' ' << p.seed << ' ' << p.scc_count << ' ' << p.min_args << ':' << p.max_args << ' '
       << format_double(p.p_intra) << ' ' << format_double(p.p_inter) << ' ' << (p.singleton_self_attack ? 1 : 0)
       << ' ' << e.arguments << ' ' << e.attacks << '\n';
  }
}

Manifest read_manifest(std::istream& is) {
  Manifest m;
  std::string line;
  std::size_t number = 0;
  while (std::getline(is, line)) {
    ++number;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind(kFormatTag, 0) == 0 && line.substr(kFormatTag.size()) != SplitMix64::kAlgorithm) {
        throw ParseError(number, "manifest uses unsupported generator '" + line.substr(kFormatTag.size()) + "'");
      }
      continue;
    }
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.size() != 9) throw ParseError(number, "expected 9 fields, got " + std::to_string(f.size()));
    ManifestEntry e;
    e.filename = f[0];
    e.params.seed = parse_number<std::uint64_t>(f[1], number, "seed");
    e.params.scc_count = parse_number<std::size_t>(f[2], number, "scc_count");
    const auto colon = f[3].find(':');
    if (colon == std::string::npos) throw ParseError(number, "args_per_scc must be min:max");
    e.params.min_args = parse_number<std::size_t>(std::string_view(f[3]).substr(0, colon), number, "min args");
    e.params.max_args = parse_number<std::size_t>(std::string_view(f[3]).substr(colon + 1), number, "max args");
    e.params.p_intra = parse_number<double>(f[4], number, "p_intra");
    e.params.p_inter = parse_number<double>(f[5], number, "p_inter");
    if (f[6] != "0" && f[6] != "1") throw ParseError(number, "self_attack must be 0 or 1");
    e.params.singleton_self_attack = f[6] == "1";
    e.arguments = parse_number<std::size_t>(f[7], number, "argument count");
    e.attacks = parse_number<std::size_t>(f[8], number, "attack count");
    m.entries.push_back(std::move(e));
  }
  return m;
}

Manifest read_manifest_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_manifest(in);
}

Manifest write_corpus(const std::vector<GenParams>& params, const std::filesystem::path& directory,
                      const std::string& prefix) {
  for (const auto& p : params) validate(p);
  std::filesystem::create_directories(directory);
  Manifest m;
  for (std::size_t i = 0; i < params.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "_%04zu.apx", i);
    m.entries.push_back(build_instance(params[i], prefix + name, directory));
  }
  write_manifest_file(m, directory);
  return m;
}

void regenerate_corpus(const Manifest& manifest, const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  for (const auto& e : manifest.entries) {
    const ManifestEntry rebuilt = build_instance(e.params, e.filename, directory);
    if (rebuilt.arguments != e.arguments || rebuilt.attacks != e.attacks) {
      throw InternalError("regenerated " + e.filename + " does not match its manifest row");
    }
  }
  write_manifest_file(manifest, directory);
}

}  // namespace sccpref
