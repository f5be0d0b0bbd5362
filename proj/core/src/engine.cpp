#include "sccpref/engine.hpp"

#include <string>
#include <utility>

#include "sccpref/errors.hpp"
#include "sccpref/grounded.hpp"

namespace sccpref {

InfluencePair l_cond(const ArgumentationFramework& af, const ArgumentSet& s, const ArgumentSet& prior,
                     const Labelling& lab) {
  std::vector<ArgId> defeated, clean;
  for (ArgId a : s) {
    bool attacked_by_in = false;
    bool all_out = true;
    for (auto q : af.attackers_at(af.position(a))) {
      const ArgId b = af.id_at(q);
      if (!prior.contains(b)) continue;
      const auto l = lab.get(b);
      if (!l) throw PreconditionError("l_cond: prior argument " + af.name(b) + " is not labelled");
      if (*l == Label::In) attacked_by_in = true;
      if (*l != Label::Out) all_out = false;
    }
    if (attacked_by_in) defeated.push_back(a);
    if (all_out) clean.push_back(a);
  }
  return {ArgumentSet::from_sorted(std::move(defeated)), ArgumentSet::from_sorted(std::move(clean))};
}

LabellingSet merge(const LabellingSet& e1, const LabellingSet& e2) {
  if (!e1.empty() && !e2.empty() && !set_intersection(e1[0].domain(), e2[0].domain()).empty()) {
    throw PreconditionError("merge requires labelling sets over disjoint domains");
  }
  std::vector<Labelling> out;
  out.reserve(e1.size() * e2.size());
  for (const auto& a : e1) {
    for (const auto& b : e2) out.push_back(a.united(b));
  }
  return LabellingSet(std::move(out));
}

MemoTable greedy_precompute(const ArgumentationFramework& af, const SccPartition& partition,
                            const LevelList& levels, const ArgumentSet& c, WorkerPool& pool,
                            const BasePrefOptions& base) {
  std::vector<std::size_t> components;
  for (const auto& level : levels.levels) components.insert(components.end(), level.begin(), level.end());
  std::vector<LabellingSet> results(components.size());
  pool.parallel_for(components.size(), [&](std::size_t i) {
    if (base.cancel) base.cancel->throw_if_expired();
    const ArgumentSet& s = partition[components[i]];
    results[i] = b_pref(restrict(af, s), set_intersection(s, c), base);
  });
  MemoTable memo;
  for (std::size_t i = 0; i < components.size(); ++i) memo.emplace(components[i], std::move(results[i]));
  return memo;
}

PreferredEngine::PreferredEngine(EngineOptions options)
    : options_(std::move(options)), pool_(options_.workers == 0 ? 1 : options_.workers) {}

BasePrefOptions PreferredEngine::base_options() const {
  return {options_.oracle_factory, options_.cancel};
}

void PreferredEngine::checkpoint() const {
  if (options_.cancel) options_.cancel->throw_if_expired();
}

EngineStats PreferredEngine::stats() const {
  EngineStats s;
  s.calls = counters_.calls.load();
  s.tasks = counters_.tasks.load();
  s.case_undecided = counters_.case_undecided.load();
  s.case_memo = counters_.case_memo.load();
  s.case_clean = counters_.case_clean.load();
  s.case_base = counters_.case_base.load();
  s.case_recursive = counters_.case_recursive.load();
  s.memo_entries = counters_.memo_entries.load();
  return s;
}

LabellingSet PreferredEngine::pref(const ArgumentationFramework& af) { return p_pref(af, af.arguments()); }

LabellingSet PreferredEngine::p_pref(const ArgumentationFramework& af, const ArgumentSet& c) {
  checkpoint();
  ++counters_.calls;
  for (ArgId id : c) {
    if (!af.contains(id)) throw DomainError("context argument " + std::to_string(id) + " not in framework");
  }

  GroundedOutcome grounded = grounded_in(af, c);
  if (grounded.undecided.empty()) return LabellingSet{std::move(grounded.decided)};

  const ArgumentationFramework sub = restrict(af, grounded.undecided);
  const SccPartition partition = compute_sccs(sub);
  const LevelList levels = build_level_list(sub, partition);

  MemoTable memo;
  if (options_.greedy) {
    memo = greedy_precompute(sub, partition, levels, c, pool_, base_options());
    counters_.memo_entries += memo.size();
  }

  // Each partial labelling remembers which level-entry labelling it extends,
  // since the per-component results are keyed by those.
  struct Partial {
    Labelling lab;
    std::size_t origin;
  };
  std::vector<Partial> current;
  current.push_back({std::move(grounded.decided), 0});
  ArgumentSet prior;

  for (const auto& level : levels.levels) {
    checkpoint();
    const std::size_t k = level.size();
    const std::size_t m = current.size();
    for (std::size_t i = 0; i < m; ++i) current[i].origin = i;

    std::vector<LabellingSet> table(k * m);
    pool_.parallel_for(k * m, [&](std::size_t t) {
      checkpoint();
      table[t] = evaluate_component(sub, partition, level[t / m], prior, current[t % m].lab, c, memo);
    });

    for (std::size_t si = 0; si < k; ++si) {
      std::vector<std::vector<Partial>> parts(current.size());
      pool_.parallel_for(current.size(), [&](std::size_t i) {
        const Partial& p = current[i];
        const LabellingSet& extensions = table[si * m + p.origin];
        parts[i].reserve(extensions.size());
        for (const auto& e : extensions) parts[i].push_back({p.lab.united(e), p.origin});
      });
      std::size_t total = 0;
      for (const auto& part : parts) total += part.size();
      std::vector<Partial> next;
      next.reserve(total);
      for (auto& part : parts) {
        for (auto& p : part) next.push_back(std::move(p));
      }
      current = std::move(next);
    }
    for (auto comp : level) prior = set_union(prior, partition[comp]);
  }

  std::vector<Labelling> result;
  result.reserve(current.size());
  for (auto& p : current) result.push_back(std::move(p.lab));
  return LabellingSet(std::move(result));
}

LabellingSet PreferredEngine::evaluate_component(const ArgumentationFramework& af, const SccPartition& partition,
                                                 std::size_t component, const ArgumentSet& prior,
                                                 const Labelling& lab, const ArgumentSet& c,
                                                 const MemoTable& memo) {
  ++counters_.tasks;
  const ArgumentSet& s = partition[component];
  const InfluencePair influence = l_cond(af, s, prior, lab);
  const ArgumentSet& defeated = influence.externally_defeated;
  const ArgumentSet& clean = influence.externally_clean;

  if (clean.empty()) {
    ++counters_.case_undecided;
    return LabellingSet{Labelling::uniform(defeated, Label::Out).united(
        Labelling::uniform(set_difference(s, defeated), Label::Undec))};
  }
  if (clean.size() == s.size()) {
    if (auto it = memo.find(component); it != memo.end()) {
      ++counters_.case_memo;
      if (options_.shadow_check_memo &&
          b_pref(restrict(af, s), set_intersection(s, c), base_options()) != it->second) {
        throw InternalError("memo entry for component " + std::to_string(component) +
                            " differs from a fresh base computation");
      }
      return it->second;
    }
    ++counters_.case_clean;
    return b_pref(restrict(af, s), set_intersection(s, c), base_options());
  }
  if (defeated.empty()) {
    ++counters_.case_base;
    return b_pref(restrict(af, s), set_intersection(clean, c), base_options());
  }
  ++counters_.case_recursive;
  LabellingSet rest = p_pref(restrict(af, set_difference(s, defeated)), set_intersection(clean, c));
  return merge(LabellingSet{Labelling::uniform(defeated, Label::Out)}, rest);
}

LabellingSet pref(const ArgumentationFramework& af, const EngineOptions& options) {
  PreferredEngine engine(options);
  return engine.pref(af);
}

}  // namespace sccpref
