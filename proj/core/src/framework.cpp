#include "sccpref/framework.hpp"

#include <algorithm>
#include <set>

#include "sccpref/errors.hpp"

namespace sccpref {

NameTable::NameTable(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<ArgId>(i)).second) {
      throw DomainError("argument '" + names_[i] + "' declared twice");
    }
  }
}

std::optional<ArgId> NameTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArgumentationFramework::ArgumentationFramework()
    : names_(std::make_shared<const NameTable>(std::vector<std::string>{})),
      attacker_offset_(1, 0),
      target_offset_(1, 0) {}

ArgumentationFramework ArgumentationFramework::from_names(
    const std::vector<std::string>& arguments,
    const std::vector<std::pair<std::string, std::string>>& attacks) {
  auto table = std::make_shared<const NameTable>(arguments);
  std::vector<Attack> edges;
  edges.reserve(attacks.size());
  for (const auto& [from, to] : attacks) {
    auto a = table->find(from);
    auto b = table->find(to);
    if (!a) throw DomainError("attack endpoint '" + from + "' is not a declared argument");
    if (!b) throw DomainError("attack endpoint '" + to + "' is not a declared argument");
    edges.emplace_back(*a, *b);
  }
  ArgumentationFramework af;
  af.names_ = std::move(table);
  std::vector<ArgId> ids(arguments.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<ArgId>(i);
  af.args_ = ArgumentSet::from_sorted(std::move(ids));
  af.build_adjacency(edges);
  return af;
}

ArgumentationFramework ArgumentationFramework::from_indices(std::vector<std::string> names,
                                                            const std::vector<Attack>& attacks) {
  const std::size_t n = names.size();
  for (const auto& [a, b] : attacks) {
    if (a >= n || b >= n) throw DomainError("attack endpoint index out of range");
  }
  ArgumentationFramework af;
  af.names_ = std::make_shared<const NameTable>(std::move(names));
  std::vector<ArgId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<ArgId>(i);
  af.args_ = ArgumentSet::from_sorted(std::move(ids));
  af.build_adjacency(attacks);
  return af;
}

void ArgumentationFramework::build_adjacency(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& input) {
  auto edges = input;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const std::size_t n = args_.size();
  target_offset_.assign(n + 1, 0);
  attacker_offset_.assign(n + 1, 0);
  for (const auto& [a, b] : edges) {
    ++target_offset_[a + 1];
    ++attacker_offset_[b + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    target_offset_[i + 1] += target_offset_[i];
    attacker_offset_[i + 1] += attacker_offset_[i];
  }
  target_list_.resize(edges.size());
  attacker_list_.resize(edges.size());
  std::vector<std::uint32_t> tfill(target_offset_.begin(), target_offset_.end() - 1);
  std::vector<std::uint32_t> afill(attacker_offset_.begin(), attacker_offset_.end() - 1);
  // Edges are sorted by (attacker, target), so both lists end up sorted.
  for (const auto& [a, b] : edges) {
    target_list_[tfill[a]++] = b;
    attacker_list_[afill[b]++] = a;
  }
}

std::optional<std::size_t> ArgumentationFramework::position_of(ArgId id) const {
  if (args_.size() == names_->size()) {
    if (id < args_.size()) return id;
    return std::nullopt;
  }
  auto ids = args_.ids();
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

std::size_t ArgumentationFramework::position(ArgId id) const {
  auto pos = position_of(id);
  if (!pos) throw DomainError("argument id " + std::to_string(id) + " is not in the framework");
  return *pos;
}

std::optional<ArgId> ArgumentationFramework::find(std::string_view name) const {
  auto id = names_->find(name);
  if (id && contains(*id)) return id;
  return std::nullopt;
}

ArgId ArgumentationFramework::id(std::string_view name) const {
  auto found = find(name);
  if (!found) throw DomainError("argument '" + std::string(name) + "' is not in the framework");
  return *found;
}

std::vector<ArgumentationFramework::Attack> ArgumentationFramework::attacks() const {
  std::vector<Attack> out;
  out.reserve(attack_count());
  for (std::size_t p = 0; p < size(); ++p) {
    for (auto q : targets_at(p)) out.emplace_back(id_at(p), id_at(q));
  }
  return out;
}

bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
  if (a.size() != b.size() || a.attack_count() != b.attack_count()) return false;
  if (a.names_ == b.names_) return a.args_ == b.args_ && a.attacks() == b.attacks();
  std::set<std::string> na, nb;
  for (ArgId id : a.args_) na.insert(a.name(id));
  for (ArgId id : b.args_) nb.insert(b.name(id));
  if (na != nb) return false;
  std::set<std::pair<std::string, std::string>> ea, eb;
  for (const auto& [x, y] : a.attacks()) ea.emplace(a.name(x), a.name(y));
  for (const auto& [x, y] : b.attacks()) eb.emplace(b.name(x), b.name(y));
  return ea == eb;
}

namespace {

void require_subset(const ArgumentationFramework& af, const ArgumentSet& s) {
  for (ArgId id : s) {
    if (!af.contains(id)) throw DomainError("argument id " + std::to_string(id) + " is not in the framework");
  }
}

}  // namespace

ArgumentSet attackers_of(const ArgumentationFramework& af, const ArgumentSet& s) {
  require_subset(af, s);
  std::vector<ArgId> out;
  for (ArgId id : s) {
    for (auto q : af.attackers_at(af.position(id))) out.push_back(af.id_at(q));
  }
  return ArgumentSet(std::move(out));
}

ArgumentSet attacked_by(const ArgumentationFramework& af, const ArgumentSet& s) {
  require_subset(af, s);
  std::vector<ArgId> out;
  for (ArgId id : s) {
    for (auto q : af.targets_at(af.position(id))) out.push_back(af.id_at(q));
  }
  return ArgumentSet(std::move(out));
}

ArgumentationFramework restrict(const ArgumentationFramework& af, const ArgumentSet& subset) {
  require_subset(af, subset);
  ArgumentationFramework out;
  out.names_ = af.names_;
  out.args_ = subset;
  if (subset.size() == af.size()) {
    out.attacker_offset_ = af.attacker_offset_;
    out.attacker_list_ = af.attacker_list_;
    out.target_offset_ = af.target_offset_;
    out.target_list_ = af.target_list_;
    return out;
  }
  constexpr std::uint32_t kAbsent = UINT32_MAX;
  std::vector<std::uint32_t> new_pos(af.size(), kAbsent);
  std::uint32_t next = 0;
  for (ArgId id : subset) new_pos[af.position(id)] = next++;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t p = 0; p < af.size(); ++p) {
    if (new_pos[p] == kAbsent) continue;
    for (auto q : af.targets_at(p)) {
      if (new_pos[q] != kAbsent) edges.emplace_back(new_pos[p], new_pos[q]);
    }
  }
  out.build_adjacency(edges);
  return out;
}

bool is_conflict_free(const ArgumentationFramework& af, const ArgumentSet& t) {
  require_subset(af, t);
  for (ArgId id : t) {
    for (auto q : af.targets_at(af.position(id))) {
      if (t.contains(af.id_at(q))) return false;
    }
  }
  return true;
}

bool is_acceptable(const ArgumentationFramework& af, ArgId arg, const ArgumentSet& t) {
  require_subset(af, t);
  const std::size_t pos = af.position(arg);
  for (auto attacker : af.attackers_at(pos)) {
    bool defended = false;
    for (auto counter : af.attackers_at(attacker)) {
      if (t.contains(af.id_at(counter))) {
        defended = true;
        break;
      }
    }
    if (!defended) return false;
  }
  return true;
}

bool is_admissible(const ArgumentationFramework& af, const ArgumentSet& t) {
  if (!is_conflict_free(af, t)) return false;
  for (ArgId id : t) {
    if (!is_acceptable(af, id, t)) return false;
  }
  return true;
}

Labelling ext2lab(const ArgumentationFramework& af, const ArgumentSet& t) {
  if (!is_conflict_free(af, t)) throw PreconditionError("ext2lab requires a conflict-free set");
  const ArgumentSet out = attacked_by(af, t);
  std::vector<LabelEntry> entries;
  entries.reserve(af.size());
  for (ArgId id : af.arguments()) {
    Label l = t.contains(id) ? Label::In : out.contains(id) ? Label::Out : Label::Undec;
    entries.push_back({id, l});
  }
  return Labelling(std::move(entries));
}

}  // namespace sccpref
