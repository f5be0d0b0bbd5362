#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sccpref {

// Dense identifier of an argument within the name table of the framework it
// was interned in. Restricted frameworks keep the identifiers of their parent.
using ArgId = std::uint32_t;

// A finite set of arguments, stored as a sorted vector of identifiers.
class ArgumentSet {
 public:
  using const_iterator = std::vector<ArgId>::const_iterator;

  ArgumentSet() = default;
  ArgumentSet(std::initializer_list<ArgId> ids);
  explicit ArgumentSet(std::vector<ArgId> ids);

  // Skips normalisation; `ids` must already be strictly increasing.
  static ArgumentSet from_sorted(std::vector<ArgId> ids);

  bool contains(ArgId id) const;
  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }

  const_iterator begin() const noexcept { return ids_.begin(); }
  const_iterator end() const noexcept { return ids_.end(); }
  std::span<const ArgId> ids() const noexcept { return ids_; }

  void insert(ArgId id);

  friend bool operator==(const ArgumentSet&, const ArgumentSet&) = default;
  friend auto operator<=>(const ArgumentSet&, const ArgumentSet&) = default;

 private:
  std::vector<ArgId> ids_;
};

ArgumentSet set_union(const ArgumentSet& a, const ArgumentSet& b);
ArgumentSet set_intersection(const ArgumentSet& a, const ArgumentSet& b);
ArgumentSet set_difference(const ArgumentSet& a, const ArgumentSet& b);
bool is_subset(const ArgumentSet& sub, const ArgumentSet& super);

}  // namespace sccpref
