#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sccpref/argument_set.hpp"
#include "sccpref/labelling.hpp"

namespace sccpref {

// Interned argument names shared by a framework and all of its restrictions.
class NameTable {
 public:
  explicit NameTable(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ArgId id) const { return names_.at(id); }
  std::optional<ArgId> find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgId> index_;
};

// A finite argumentation framework (arguments plus attack relation).
//
// Arguments are addressed in two ways: by ArgId (stable across restrictions,
// used by ArgumentSet and Labelling) and by position 0..size()-1 (dense, used
// by the adjacency accessors). In a framework built directly from names the
// two coincide. Immutable after construction.
class ArgumentationFramework {
 public:
  using Attack = std::pair<ArgId, ArgId>;

  ArgumentationFramework();

  // Throws DomainError on an undeclared attack endpoint or a repeated name.
  static ArgumentationFramework from_names(
      const std::vector<std::string>& arguments,
      const std::vector<std::pair<std::string, std::string>>& attacks);

  // Attack endpoints are indices into `names`. Duplicate attacks are dropped.
  static ArgumentationFramework from_indices(std::vector<std::string> names,
                                             const std::vector<Attack>& attacks);

  std::size_t size() const noexcept { return args_.size(); }
  bool empty() const noexcept { return args_.empty(); }
  std::size_t attack_count() const noexcept { return attacker_list_.size(); }

  const ArgumentSet& arguments() const noexcept { return args_; }
  bool contains(ArgId id) const { return position_of(id).has_value(); }

  ArgId id_at(std::size_t pos) const { return args_.ids()[pos]; }
  std::optional<std::size_t> position_of(ArgId id) const;
  // Throws DomainError when `id` is not an argument of this framework.
  std::size_t position(ArgId id) const;

  // Positions of the attackers of / arguments attacked by the argument at `pos`.
  std::span<const std::uint32_t> attackers_at(std::size_t pos) const {
    return {attacker_list_.data() + attacker_offset_[pos], attacker_offset_[pos + 1] - attacker_offset_[pos]};
  }
  std::span<const std::uint32_t> targets_at(std::size_t pos) const {
    return {target_list_.data() + target_offset_[pos], target_offset_[pos + 1] - target_offset_[pos]};
  }

  const std::string& name(ArgId id) const { return names_->name(id); }
  // Looks a name up among this framework's arguments.
  std::optional<ArgId> find(std::string_view name) const;
  // Throws DomainError when `name` is not an argument of this framework.
  ArgId id(std::string_view name) const;
  const std::shared_ptr<const NameTable>& name_table() const noexcept { return names_; }

  // All attacks, sorted by (attacker, target) identifier.
  std::vector<Attack> attacks() const;

  // Structural equality over argument names and named attack pairs.
  friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b);

  friend ArgumentationFramework restrict(const ArgumentationFramework& af, const ArgumentSet& subset);

 private:
  void build_adjacency(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::shared_ptr<const NameTable> names_;
  ArgumentSet args_;
  std::vector<std::uint32_t> attacker_offset_;
  std::vector<std::uint32_t> attacker_list_;
  std::vector<std::uint32_t> target_offset_;
  std::vector<std::uint32_t> target_list_;
};

// { b | b attacks some member of s }
ArgumentSet attackers_of(const ArgumentationFramework& af, const ArgumentSet& s);
// { b | some member of s attacks b }
ArgumentSet attacked_by(const ArgumentationFramework& af, const ArgumentSet& s);

// The sub-framework induced by `subset`; attacks leaving it are dropped.
ArgumentationFramework restrict(const ArgumentationFramework& af, const ArgumentSet& subset);

bool is_conflict_free(const ArgumentationFramework& af, const ArgumentSet& t);
// Every attacker of `arg` is attacked by some member of `t`.
bool is_acceptable(const ArgumentationFramework& af, ArgId arg, const ArgumentSet& t);
bool is_admissible(const ArgumentationFramework& af, const ArgumentSet& t);

// in on t, out on attacked_by(t), undec elsewhere. Requires t conflict-free.
Labelling ext2lab(const ArgumentationFramework& af, const ArgumentSet& t);

}  // namespace sccpref
