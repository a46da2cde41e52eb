#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pk/poset.hpp"

namespace pk {

/* A ranked poset presented as level widths plus one biadjacency matrix per
 * adjacent level pair. mats[j][r][c] == 1 when row element r of level j + 2
 * covers column element c of level j + 1; covers onto "*" are implicit. */
struct LevelStructure {
  std::vector<int> widths;                          // levels 1..h
  std::vector<std::vector<std::vector<uint8_t>>> mats; // h - 1 matrices

  static LevelStructure of(const RankedPoset& p);
  /* Standalone poset with ids "e<level>_<index>" (zero-padded). */
  RankedPoset build() const;
};

/* Byte encoding of the structure as labeled. */
std::string encode(const LevelStructure& ls);

/* Lexicographically smallest encoding over all per-level relabelings. Two
 * posets are isomorphic exactly when these agree. */
std::string canonical_encode(const LevelStructure& ls);

std::string canonical_form(const RankedPoset& p);

bool isomorphic(const RankedPoset& a, const RankedPoset& b);

} // namespace pk
