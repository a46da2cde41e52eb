#pragma once

#include <functional>
#include <random>
#include <vector>

#include "pk/poset.hpp"

namespace pk {

/* Bounds for exhaustive generation of cyclic ranked posets. Element counts
 * include the base point "*"; a rank bound of 0 leaves that side open. When
 * profile is nonempty exactly those level widths are generated and the
 * element bound is ignored. budget caps the number of labeled level
 * structures examined, 0 meaning no cap. */
struct EnumerationSpec {
  int max_elements = 7;
  int max_rank = 0;
  int min_rank = 0;
  std::vector<int> profile;
  bool reject_isomorphic = true;
  long budget = 0;
};

/* Every cyclic poset within the bounds, one representative per isomorphism
 * class unless reject_isomorphic is off. The order is deterministic:
 * ascending element count, then level profiles in generation order, then
 * cover matrices in ascending bit order. */
std::vector<RankedPoset> enumerate_cyclic(const EnumerationSpec& spec);

/* Streaming form. visit receives each poset and its position in the emitted
 * order and may return false to stop; the call then returns false. */
bool enumerate_cyclic(const EnumerationSpec& spec,
                      const std::function<bool(RankedPoset, long)>& visit);

/* One pseudo-random cyclic poset with at most max_elements elements
 * (including "*") and, when max_rank > 0, rank at most max_rank. */
RankedPoset random_cyclic(std::mt19937_64& rng, int max_elements, int max_rank = 0);

} // namespace pk
