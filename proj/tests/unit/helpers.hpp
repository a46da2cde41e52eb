#pragma once

#include "pk/poset.hpp"

/* Handmade posets shared across test files. */
namespace testposets {

/* Rank-4 cyclic poset that is uniform but whose open interval below the
 * top is a circle; the smallest kind of Koszulity failure. */
inline pk::RankedPoset circle_top() {
  return pk::RankedPoset::from_parts(
      {{"a", 1}, {"b", 1}, {"u", 2}, {"v", 2}, {"w", 2},
       {"s", 3}, {"t", 3}, {"y", 4}},
      {{"u", "a"}, {"u", "b"}, {"v", "a"}, {"v", "b"}, {"w", "b"},
       {"s", "u"}, {"s", "w"}, {"t", "v"}, {"t", "w"},
       {"y", "s"}, {"y", "t"}});
}

} // namespace testposets
