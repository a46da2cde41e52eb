#include "pk/canonical.hpp"

#include <algorithm>
#include <cassert>

namespace pk {

LevelStructure LevelStructure::of(const RankedPoset& p) {
  LevelStructure ls;
  int h = p.poset_rank();
  for (int r = 1; r <= h; ++r)
    ls.widths.push_back(static_cast<int>(p.level(r).size()));
  for (int r = 2; r <= h; ++r) {
    const auto& rows = p.level(r);
    const auto& cols = p.level(r - 1);
    std::vector<std::vector<uint8_t>> m(rows.size(),
                                        std::vector<uint8_t>(cols.size(), 0));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j)
        if (p.has_cover(rows[i], cols[j])) m[i][j] = 1;
    ls.mats.push_back(std::move(m));
  }
  return ls;
}

RankedPoset LevelStructure::build() const {
  int h = static_cast<int>(widths.size());
  auto name = [&](int level, int i) {
    std::string s = "e" + std::to_string(level) + "_";
    if (i < 10) s += "0";
    return s + std::to_string(i);
  };
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int r = 1; r <= h; ++r) {
    assert(widths[r - 1] < 100);
    for (int i = 0; i < widths[r - 1]; ++i) elements.push_back({name(r, i), r});
  }
  for (int r = 2; r <= h; ++r) {
    const auto& m = mats[r - 2];
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m[i].size(); ++j)
        if (m[i][j]) covers.push_back({name(r, static_cast<int>(i)),
                                       name(r - 1, static_cast<int>(j))});
  }
  return RankedPoset::from_parts(elements, covers);
}

std::string encode(const LevelStructure& ls) {
  std::string s = "p:";
  for (size_t i = 0; i < ls.widths.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ls.widths[i]);
  }
  s += "|";
  for (const auto& m : ls.mats)
    for (const auto& row : m)
      for (uint8_t b : row) s += b ? '1' : '0';
  return s;
}

std::string canonical_encode(const LevelStructure& ls) {
  int h = static_cast<int>(ls.widths.size());
  if (h == 0) return encode(ls);

  // All permutations of each level, in lexicographic order.
  std::vector<std::vector<std::vector<int>>> perms(h);
  for (int l = 0; l < h; ++l) {
    std::vector<int> ident(ls.widths[l]);
    for (int i = 0; i < ls.widths[l]; ++i) ident[i] = i;
    do {
      perms[l].push_back(ident);
    } while (std::next_permutation(ident.begin(), ident.end()));
  }

  std::vector<size_t> choice(h, 0);
  std::string best;
  for (;;) {
    std::string cand = "p:";
    for (int l = 0; l < h; ++l) {
      if (l) cand += ",";
      cand += std::to_string(ls.widths[l]);
    }
    cand += "|";
    for (int r = 2; r <= h; ++r) {
      const auto& m = ls.mats[r - 2];
      const auto& pr = perms[r - 1][choice[r - 1]];
      const auto& pc = perms[r - 2][choice[r - 2]];
      for (int i = 0; i < ls.widths[r - 1]; ++i)
        for (int j = 0; j < ls.widths[r - 2]; ++j)
          cand += m[pr[i]][pc[j]] ? '1' : '0';
    }
    if (best.empty() || cand < best) best = std::move(cand);

    int l = h - 1;
    while (l >= 0 && ++choice[l] == perms[l].size()) choice[l--] = 0;
    if (l < 0) break;
  }
  return best;
}

std::string canonical_form(const RankedPoset& p) {
  return canonical_encode(LevelStructure::of(p));
}

bool isomorphic(const RankedPoset& a, const RankedPoset& b) {
  return canonical_form(a) == canonical_form(b);
}

} // namespace pk
