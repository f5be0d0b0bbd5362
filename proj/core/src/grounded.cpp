#include "sccpref/grounded.hpp"

#include <cstdint>
#include <string>

#include "sccpref/errors.hpp"

namespace sccpref {

GroundedOutcome grounded_in(const ArgumentationFramework& af, const ArgumentSet& c) {
  const std::size_t n = af.size();
  std::vector<bool> in_c(n, false);
  for (ArgId id : c) {
    auto pos = af.position_of(id);
    if (!pos) throw DomainError("context argument " + std::to_string(id) + " not in framework");
    in_c[*pos] = true;
  }

  enum : std::uint8_t { kNone, kIn, kOut };
  std::vector<std::uint8_t> state(n, kNone);
  std::vector<std::uint32_t> live_attackers(n);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t p = 0; p < n; ++p) {
    live_attackers[p] = static_cast<std::uint32_t>(af.attackers_at(p).size());
    if (live_attackers[p] == 0 && in_c[p]) {
      state[p] = kIn;
      queue.push_back(p);
    }
  }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto t : af.targets_at(queue[head])) {
      if (state[t] != kNone) continue;
      state[t] = kOut;
      for (auto u : af.targets_at(t)) {
        if (--live_attackers[u] == 0 && state[u] == kNone && in_c[u]) {
          state[u] = kIn;
          queue.push_back(u);
        }
      }
    }
  }

  std::vector<LabelEntry> decided;
  std::vector<ArgId> undecided;
  for (std::uint32_t p = 0; p < n; ++p) {
    switch (state[p]) {
      case kIn:
        decided.push_back({af.id_at(p), Label::In});
        break;
      case kOut:
        decided.push_back({af.id_at(p), Label::Out});
        break;
      default:
        undecided.push_back(af.id_at(p));
    }
  }
  return {Labelling(std::move(decided)), ArgumentSet::from_sorted(std::move(undecided))};
}

}  // namespace sccpref
