#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harness/report.hpp"
#include "pk/enumerate.hpp"
#include "pk/field.hpp"

namespace pk::harness {

/* A named witness hunt over the cyclic-poset enumeration. */
struct SearchSpec {
  std::string predicate; // one of search_names()
  FieldSpec field;
  KPolicy policy = KPolicy::derived;
  EnumerationSpec enumeration;
};

struct SearchHit {
  RankedPoset poset;
  AnalysisReport report;
  long index = 0; // position in enumeration order
};

std::vector<std::string> search_names();

/* Bounds and field tuned to the named predicate. The rank limits encode two
 * facts: uniformity can only fail at elements of rank 3 and above, and every
 * poset of rank at most 3 is Koszul (so it and its dual are both weakly
 * Cohen-Macaulay). */
SearchSpec named_search(const std::string& name);

/* First poset in enumeration order satisfying the named predicate, with its
 * full report; nothing when the bounds are exhausted without a hit. */
std::optional<SearchHit> run_search(const SearchSpec& spec);

/* Generic form: the predicate sees the full report of every candidate, which
 * costs the whole analysis pipeline per poset. Keep the bounds small. */
std::optional<SearchHit> search_witness(
    const std::function<bool(const AnalysisReport&)>& predicate,
    const FieldSpec& field, KPolicy policy, const EnumerationSpec& enumeration);

} // namespace pk::harness
