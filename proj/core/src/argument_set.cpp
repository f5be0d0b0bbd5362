#include "sccpref/argument_set.hpp"

#include <algorithm>
#include <iterator>

namespace sccpref {

ArgumentSet::ArgumentSet(std::initializer_list<ArgId> ids) : ArgumentSet(std::vector<ArgId>(ids)) {}

ArgumentSet::ArgumentSet(std::vector<ArgId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ArgumentSet ArgumentSet::from_sorted(std::vector<ArgId> ids) {
  ArgumentSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool ArgumentSet::contains(ArgId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

void ArgumentSet::insert(ArgId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

ArgumentSet set_union(const ArgumentSet& a, const ArgumentSet& b) {
  std::vector<ArgId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ArgumentSet::from_sorted(std::move(out));
}

ArgumentSet set_intersection(const ArgumentSet& a, const ArgumentSet& b) {
  std::vector<ArgId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ArgumentSet::from_sorted(std::move(out));
}

ArgumentSet set_difference(const ArgumentSet& a, const ArgumentSet& b) {
  std::vector<ArgId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ArgumentSet::from_sorted(std::move(out));
}

bool is_subset(const ArgumentSet& sub, const ArgumentSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace sccpref
