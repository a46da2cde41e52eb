#pragma once

#include <string>
#include <vector>

#include "pk/poset.hpp"

namespace pk {

struct UniformWitness {
  std::string element;
  int class_count = 0;
};

struct UniformResult {
  bool uniform = false;
  std::vector<UniformWitness> witnesses;
};

/* An element x is uniform when the rank-(rk x - 1) elements under it fall
 * into a single class of the relation "shares a lower cover" (the shared
 * element may be "*"). Computed both directly and through connectivity of
 * the two-layer window under each rank >= 3 element; the two must agree. */
UniformResult is_uniform(const RankedPoset& p);

/* Partition of the positive elements: elements covered by a common member
 * of W are identified, transitively; everything else is a singleton.
 * Classes are sorted internally and ordered by first member. W must be a
 * level set. */
std::vector<std::vector<int>> simW_classes(const RankedPoset& p,
                                           const std::vector<int>& w);

/* Level families: for n = 1 .. top rank, t[n] and m[n] are lists of level
 * subsets (sorted vectors of element indices). t[top] = {{top element}};
 * t[n] collects, over W in t[n+1], the simW classes containing an element
 * covered by W; m[n] splits each member of t[n] by connectivity of its
 * depth-1 window (singletons at n = 1). */
struct LevelSetFamily {
  std::vector<std::vector<std::vector<int>>> t, m; // index 0 unused
};

LevelSetFamily tm_sets(const RankedPoset& p);

/* Union over positive x of the t-families of the principal ideals [*, x],
 * as subsets of p itself; deduplicated, deterministic order. */
std::vector<std::vector<int>> t_family_union(const RankedPoset& p);

} // namespace pk
