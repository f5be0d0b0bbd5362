#include "sccpref/labelling.hpp"

#include <algorithm>

#include "sccpref/errors.hpp"

namespace sccpref {

std::string_view to_string(Label label) noexcept {
  switch (label) {
    case Label::In:
      return "in";
    case Label::Out:
      return "out";
    case Label::Undec:
      return "undec";
  }
  return "?";
}

Labelling::Labelling(std::vector<LabelEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                [](const LabelEntry& a, const LabelEntry& b) { return a.arg == b.arg; });
  if (dup != entries_.end()) {
    throw PreconditionError("labelling assigns argument " + std::to_string(dup->arg) + " twice");
  }
}

Labelling Labelling::uniform(const ArgumentSet& domain, Label label) {
  Labelling l;
  l.entries_.reserve(domain.size());
  for (ArgId a : domain) l.entries_.push_back({a, label});
  return l;
}

std::optional<Label> Labelling::get(ArgId arg) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), arg,
                             [](const LabelEntry& e, ArgId id) { return e.arg < id; });
  if (it == entries_.end() || it->arg != arg) return std::nullopt;
  return it->label;
}

ArgumentSet Labelling::domain() const {
  std::vector<ArgId> ids;
  ids.reserve(entries_.size());
  for (const auto& e : entries_) ids.push_back(e.arg);
  return ArgumentSet::from_sorted(std::move(ids));
}

ArgumentSet Labelling::with(Label label) const {
  std::vector<ArgId> ids;
  for (const auto& e : entries_) {
    if (e.label == label) ids.push_back(e.arg);
  }
  return ArgumentSet::from_sorted(std::move(ids));
}

Labelling Labelling::united(const Labelling& other) const {
  Labelling out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->arg < b->arg) {
      out.entries_.push_back(*a++);
    } else if (b->arg < a->arg) {
      out.entries_.push_back(*b++);
    } else {
      throw PreconditionError("cannot unite labellings with overlapping domains (argument " +
                              std::to_string(a->arg) + ")");
    }
  }
  out.entries_.insert(out.entries_.end(), a, entries_.end());
  out.entries_.insert(out.entries_.end(), b, other.entries_.end());
  return out;
}

namespace {

bool same_domain(const Labelling& a, const Labelling& b) {
  if (a.size() != b.size()) return false;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].arg != eb[i].arg) return false;
  }
  return true;
}

}  // namespace

LabellingSet::LabellingSet(std::initializer_list<Labelling> items)
    : LabellingSet(std::vector<Labelling>(items)) {}

LabellingSet::LabellingSet(std::vector<Labelling> items) : items_(std::move(items)) {
  for (std::size_t i = 1; i < items_.size(); ++i) {
    if (!same_domain(items_[0], items_[i])) {
      throw PreconditionError("labelling set members must share one domain");
    }
  }
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool LabellingSet::contains(const Labelling& l) const {
  return std::binary_search(items_.begin(), items_.end(), l);
}

std::vector<ArgumentSet> LabellingSet::in_sets() const {
  std::vector<ArgumentSet> out;
  out.reserve(items_.size());
  for (const auto& l : items_) out.push_back(l.in_set());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sccpref
