#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sccpref/generator.hpp"

namespace sccpref {

struct ManifestEntry {
  std::string filename;
  GenParams params;
  std::size_t arguments = 0;
  std::size_t attacks = 0;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct Manifest {
  std::vector<ManifestEntry> entries;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

inline constexpr const char* kManifestName = "manifest.txt";

// Line-oriented text: two '#' header lines (format tag with the RNG name,
// column names), then per instance
//   filename seed scc_count min:max p_intra p_inter self_attack arguments attacks
// separated by single spaces. Probabilities use shortest round-trip form.
void write_manifest(const Manifest& manifest, std::ostream& os);
Manifest read_manifest(std::istream& is);  // throws ParseError
Manifest read_manifest_file(const std::filesystem::path& path);

// Generates one APX file per parameter set into `directory` (created if
// missing) plus manifest.txt, and returns the manifest. Files are named
// <prefix>_0000.apx, <prefix>_0001.apx, ...
Manifest write_corpus(const std::vector<GenParams>& params, const std::filesystem::path& directory,
                      const std::string& prefix = "af");

// Rebuilds every instance listed in `manifest` into `directory`, rewriting the
// manifest as well. Throws InternalError if a regenerated instance disagrees
// with the recorded argument or attack count.
void regenerate_corpus(const Manifest& manifest, const std::filesystem::path& directory);

}  // namespace sccpref
