#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sccpref/argument_set.hpp"

namespace sccpref {

enum class Label : std::uint8_t { In, Out, Undec };

std::string_view to_string(Label label) noexcept;

struct LabelEntry {
  ArgId arg;
  Label label;

  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
  friend auto operator<=>(const LabelEntry&, const LabelEntry&) = default;
};

// A total map from an explicit domain of arguments to {in, out, undec}.
// Entries are kept sorted by argument identifier, so two labellings over the
// same name table compare equal exactly when they agree pointwise.
class Labelling {
 public:
  Labelling() = default;

  // Throws PreconditionError if an argument is assigned twice.
  explicit Labelling(std::vector<LabelEntry> entries);

  static Labelling uniform(const ArgumentSet& domain, Label label);

  std::optional<Label> get(ArgId arg) const;
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const LabelEntry> entries() const noexcept { return entries_; }

  ArgumentSet domain() const;
  ArgumentSet with(Label label) const;
  ArgumentSet in_set() const { return with(Label::In); }

  // Union of two labellings over disjoint domains; PreconditionError on overlap.
  Labelling united(const Labelling& other) const;

  friend bool operator==(const Labelling&, const Labelling&) = default;
  friend auto operator<=>(const Labelling&, const Labelling&) = default;

 private:
  std::vector<LabelEntry> entries_;
};

// A set of labellings over one shared domain, kept in canonical (sorted,
// duplicate-free) order.
class LabellingSet {
 public:
  using const_iterator = std::vector<Labelling>::const_iterator;

  LabellingSet() = default;
  LabellingSet(std::initializer_list<Labelling> items);
  // Throws PreconditionError if the labellings do not share one domain.
  explicit LabellingSet(std::vector<Labelling> items);

  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  const Labelling& operator[](std::size_t i) const { return items_[i]; }
  bool contains(const Labelling& l) const;

  // In-sets of all members, sorted.
  std::vector<ArgumentSet> in_sets() const;

  friend bool operator==(const LabellingSet&, const LabellingSet&) = default;

 private:
  std::vector<Labelling> items_;
};

}  // namespace sccpref
