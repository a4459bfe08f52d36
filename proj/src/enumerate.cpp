#include "mgk/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace mgk {

Closure enumerate_subgroup(const GroupPtr& group, const std::vector<Value>& gens,
                           std::size_t cap) {
  std::vector<Value> step;
  for (const Value& g : gens) {
    step.push_back(g);
    step.push_back(group->inverse(g));
  }
  std::sort(step.begin(), step.end());
  step.erase(std::unique(step.begin(), step.end()), step.end());

  Closure out;
  std::unordered_set<Value, ValueHash> seen;
  const Value e = group->identity();
  seen.insert(e);
  out.elements.push_back(e);
  std::vector<Value> frontier{e};
  while (!frontier.empty()) {
    std::vector<Value> next;
    for (const Value& v : frontier)
      for (const Value& s : step) {
        Value w = group->multiply(s, v);
        if (seen.insert(w).second) {
          next.push_back(std::move(w));
          if (seen.size() > cap) {
            out.capped = true;
            return out;
          }
        }
      }
    std::sort(next.begin(), next.end());
    out.elements.insert(out.elements.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace mgk
