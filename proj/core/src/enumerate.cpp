#include "pk/enumerate.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "pk/canonical.hpp"
#include "pk/error.hpp"

namespace pk {

namespace {

/* Bit masks of the rows-by-cols 0/1 matrices with no zero row and no zero
 * column, ascending; entry (i, j) sits at bit i * cols + j. Such a matrix
 * records which upper-level elements cover which lower-level ones, so a zero
 * row would dangle an element and a zero column would add a second maximal
 * element below the top. */
std::vector<long> valid_masks(int rows, int cols) {
  int bits = rows * cols;
  check(bits <= 25, errc::bound_too_large,
        "level pair of widths " + std::to_string(cols) + " and " +
            std::to_string(rows) + " needs " + std::to_string(bits) +
            " cover bits");
  std::vector<long> out;
  long row_full = (1L << cols) - 1;
  for (long mask = 0; mask < (1L << bits); ++mask) {
    bool ok = true;
    long col_seen = 0;
    for (int i = 0; ok && i < rows; ++i) {
      long row = (mask >> (i * cols)) & row_full;
      if (row == 0) ok = false;
      col_seen |= row;
    }
    if (ok && col_seen == row_full) out.push_back(mask);
  }
  return out;
}

std::vector<std::vector<uint8_t>> decode_mask(long mask, int rows, int cols) {
  std::vector<std::vector<uint8_t>> m(rows, std::vector<uint8_t>(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m[i][j] = static_cast<uint8_t>((mask >> (i * cols + j)) & 1);
  return m;
}

/* Ordered level profiles summing to t whose top width is 1, i.e. the
 * profiles a cyclic poset with t positive elements can have. Prefixes are
 * produced in lexicographic order. */
void profiles_with_single_top(int remaining, std::vector<int>& prefix,
                              std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    auto profile = prefix;
    profile.push_back(1);
    out.push_back(std::move(profile));
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    prefix.push_back(part);
    profiles_with_single_top(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

bool enumerate_cyclic(const EnumerationSpec& spec,
                      const std::function<bool(RankedPoset, long)>& visit) {
  long examined = 0;
  long emitted = 0;
  std::map<std::pair<int, int>, std::vector<long>> cache;
  auto masks_for = [&](int rows, int cols) -> const std::vector<long>& {
    auto key = std::make_pair(rows, cols);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, valid_masks(rows, cols)).first;
    return it->second;
  };

  auto run_profile = [&](const std::vector<int>& widths) {
    int h = static_cast<int>(widths.size());
    if (widths.back() != 1) return true;
    if (spec.min_rank > 0 && h < spec.min_rank) return true;
    if (spec.max_rank > 0 && h > spec.max_rank) return true;

    std::vector<const std::vector<long>*> lists;
    for (int r = 2; r <= h; ++r)
      lists.push_back(&masks_for(widths[r - 1], widths[r - 2]));

    std::vector<size_t> idx(lists.size(), 0);
    for (bool more = true; more;) {
      ++examined;
      if (spec.budget > 0 && examined > spec.budget)
        fail(errc::budget_exceeded, "enumeration budget of " +
                                        std::to_string(spec.budget) +
                                        " structures exhausted");
      LevelStructure ls;
      ls.widths = widths;
      for (size_t k = 0; k < lists.size(); ++k)
        ls.mats.push_back(
            decode_mask((*lists[k])[idx[k]], widths[k + 1], widths[k]));
      if (!spec.reject_isomorphic || encode(ls) == canonical_encode(ls)) {
        if (!visit(ls.build(), emitted++)) return false;
      }

      int k = static_cast<int>(idx.size()) - 1;
      while (k >= 0 && ++idx[k] == lists[k]->size()) idx[k--] = 0;
      more = k >= 0;
    }
    return true;
  };

  if (!spec.profile.empty()) {
    for (int w : spec.profile)
      check(w >= 1, errc::bad_input, "profile widths must be positive");
    return run_profile(spec.profile);
  }

  check(spec.max_elements >= 2, errc::empty_argument,
        "enumeration needs room for at least one element above \"*\"");
  for (int t = 1; t <= spec.max_elements - 1; ++t) {
    std::vector<std::vector<int>> profiles;
    std::vector<int> prefix;
    profiles_with_single_top(t - 1, prefix, profiles);
    for (const auto& widths : profiles)
      if (!run_profile(widths)) return false;
  }
  return true;
}

std::vector<RankedPoset> enumerate_cyclic(const EnumerationSpec& spec) {
  std::vector<RankedPoset> out;
  enumerate_cyclic(spec, [&](RankedPoset p, long) {
    out.push_back(std::move(p));
    return true;
  });
  return out;
}

RankedPoset random_cyclic(std::mt19937_64& rng, int max_elements, int max_rank) {
  check(max_elements >= 2, errc::empty_argument,
        "a random cyclic poset needs at least one element above \"*\"");
  std::uniform_int_distribution<int> size_dist(1, max_elements - 1);
  std::uniform_int_distribution<int> bit(0, 1);
  for (;;) {
    int t = size_dist(rng);
    std::vector<int> widths;
    int run = 0;
    // Lower levels form a uniform composition of t - 1 drawn from
    // independent cut decisions; the top level is always a single element.
    for (int i = 1; i <= t - 1; ++i) {
      ++run;
      if (i == t - 1 || bit(rng) == 1) {
        widths.push_back(run);
        run = 0;
      }
    }
    widths.push_back(1);
    if (max_rank > 0 && static_cast<int>(widths.size()) > max_rank) continue;

    LevelStructure ls;
    ls.widths = widths;
    bool ok = true;
    for (size_t k = 0; ok && k + 1 < widths.size(); ++k) {
      int rows = widths[k + 1], cols = widths[k];
      std::vector<std::vector<uint8_t>> m(rows, std::vector<uint8_t>(cols, 0));
      std::vector<uint8_t> col_seen(cols, 0);
      for (int i = 0; ok && i < rows; ++i) {
        bool row_seen = false;
        for (int j = 0; j < cols; ++j) {
          m[i][j] = static_cast<uint8_t>(bit(rng));
          row_seen = row_seen || m[i][j];
          col_seen[j] |= m[i][j];
        }
        ok = row_seen;
      }
      for (int j = 0; ok && j < cols; ++j) ok = col_seen[j] != 0;
      ls.mats.push_back(std::move(m));
    }
    if (ok) return ls.build();
  }
}

} // namespace pk
