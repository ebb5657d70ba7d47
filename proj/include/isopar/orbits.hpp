// Group closure of integer linear maps and orbit partition of a finite point
// set under the resulting group.  Groups here are tiny (dihedral-sized), so a
// worklist closure over the matrix monoid is entirely adequate.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "isopar/rational.hpp"

namespace isopar {

// Closes {identity} ∪ generators under composition.  Every generator of the
// classification is invertible of finite order, so the closure is the whole
// generated group.
inline std::vector<IntMat> close_group(std::vector<IntMat> gens, std::size_t dim,
                                       std::size_t max_order = 4096) {
  std::set<IntMat> seen;
  std::vector<IntMat> work;
  auto push = [&](const IntMat& m) {
    if (seen.insert(m).second) work.push_back(m);
  };
  push(identity_map(dim));
  for (const auto& g : gens) {
    ISOPAR_REQUIRE(g.size() == dim, "generator dimension mismatch");
    push(g);
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    ISOPAR_REQUIRE(seen.size() <= max_order, "group closure exceeded expected order bound");
    for (const auto& g : gens) push(compose(g, work[i]));
  }
  return {seen.begin(), seen.end()};
}

// Orbits of `points` under `group`, each orbit sorted with its
// lexicographically least representative first; orbit list sorted by
// representative as well.  Any group element carrying a point outside the set
// is a hard error: the maps are supposed to permute the admissible set.
inline std::vector<std::vector<RatVec>> orbit_partition(const std::vector<RatVec>& points,
                                                        const std::vector<IntMat>& group) {
  std::vector<RatVec> sorted(points);
  std::sort(sorted.begin(), sorted.end(), lex_less);
  std::vector<char> used(sorted.size(), 0);
  auto find = [&](const RatVec& v) -> int {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v, lex_less);
    if (it == sorted.end() || *it != v) return -1;
    return static_cast<int>(it - sorted.begin());
  };
  std::vector<std::vector<RatVec>> orbits;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (used[i]) continue;
    std::vector<RatVec> orbit;
    std::vector<std::size_t> stack{i};
    used[i] = 1;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      orbit.push_back(sorted[cur]);
      for (const auto& g : group) {
        int img = find(apply_map(g, sorted[cur]));
        ISOPAR_REQUIRE(img >= 0, "group element maps an admissible point outside the set");
        if (!used[img]) {
          used[img] = 1;
          stack.push_back(static_cast<std::size_t>(img));
        }
      }
    }
    std::sort(orbit.begin(), orbit.end(), lex_less);
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return lex_less(a.front(), b.front()); });
  return orbits;
}

}  // namespace isopar
