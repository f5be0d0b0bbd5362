#include "sccpref/scc.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "sccpref/errors.hpp"

namespace sccpref {

SccPartition::SccPartition(std::vector<ArgumentSet> components, std::vector<std::size_t> component_at_position)
    : components_(std::move(components)), component_at_(std::move(component_at_position)) {}

SccPartition compute_sccs(const ArgumentationFramework& af) {
  const std::size_t n = af.size();
  constexpr std::uint32_t kUnvisited = UINT32_MAX;
  std::vector<std::uint32_t> index(n, kUnvisited), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> scc_stack;
  std::vector<std::vector<std::uint32_t>> raw;
  std::vector<std::size_t> raw_of(n, 0);

  struct Frame {
    std::uint32_t node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = counter++;
    scc_stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      const auto succ = af.targets_at(f.node);
      if (f.next_edge < succ.size()) {
        const std::uint32_t w = succ[f.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = counter++;
          scc_stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[w]);
        }
        continue;
      }
      const std::uint32_t v = f.node;
      call.pop_back();
      if (!call.empty()) {
        const std::uint32_t parent = call.back().node;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
      if (lowlink[v] == index[v]) {
        std::vector<std::uint32_t> comp;
        std::uint32_t w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = false;
          raw_of[w] = raw.size();
          comp.push_back(w);
        } while (w != v);
        raw.push_back(std::move(comp));
      }
    }
  }

  // Renumber components by smallest contained argument (positions are
  // increasing in ArgId, so the smallest position identifies it).
  std::vector<std::uint32_t> smallest(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    smallest[i] = *std::min_element(raw[i].begin(), raw[i].end());
  }
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return smallest[a] < smallest[b]; });
  std::vector<std::size_t> rank(raw.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  std::vector<ArgumentSet> components(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::vector<ArgId> ids;
    ids.reserve(raw[i].size());
    for (auto p : raw[i]) ids.push_back(af.id_at(p));
    components[rank[i]] = ArgumentSet(std::move(ids));
  }
  std::vector<std::size_t> component_at(n);
  for (std::size_t p = 0; p < n; ++p) component_at[p] = rank[raw_of[p]];
  return SccPartition(std::move(components), std::move(component_at));
}

LevelList build_level_list(const ArgumentationFramework& af, const SccPartition& partition) {
  const std::size_t k = partition.size();
  std::vector<std::vector<std::size_t>> succ(k);
  std::vector<std::size_t> indegree(k, 0);
  for (std::size_t p = 0; p < af.size(); ++p) {
    const std::size_t from = partition.component_at(p);
    for (auto q : af.targets_at(p)) {
      const std::size_t to = partition.component_at(q);
      if (from != to) succ[from].push_back(to);
    }
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto t : s) ++indegree[t];
  }

  std::vector<std::size_t> level(k, 0);
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < k; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::size_t processed = 0;
  std::size_t depth = 0;
  while (!ready.empty()) {
    const std::size_t c = ready.back();
    ready.pop_back();
    ++processed;
    depth = std::max(depth, level[c] + 1);
    for (auto t : succ[c]) {
      level[t] = std::max(level[t], level[c] + 1);
      if (--indegree[t] == 0) ready.push_back(t);
    }
  }
  if (processed != k) throw InternalError("condensation graph contains a cycle");

  LevelList out;
  out.levels.resize(depth);
  for (std::size_t i = 0; i < k; ++i) out.levels[level[i]].push_back(i);
  // Components are indexed by smallest argument, so index order is the
  // deterministic scheduling order within each level.
  return out;
}

}  // namespace sccpref
