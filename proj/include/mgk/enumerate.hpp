#pragma once

#include <optional>
#include <vector>

#include "mgk/group.hpp"

namespace mgk {

struct Closure {
  std::vector<Value> elements;  // BFS by word length, lexicographic per layer
  bool capped = false;          // true when the cap was hit; elements partial
};

/// Full subgroup closure of the generators, if its size stays within cap.
/// Expansion uses generators and their inverses; layers are sorted by
/// canonical payload, so iteration order is reproducible run to run.
Closure enumerate_subgroup(const GroupPtr& group, const std::vector<Value>& gens,
                           std::size_t cap);

inline Closure enumerate_subgroup(const MarkedGroup& mg, std::size_t cap) {
  return enumerate_subgroup(mg.group(), mg.marking(), cap);
}

}  // namespace mgk
