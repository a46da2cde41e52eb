#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pk/error.hpp"

namespace pk {

/* Unvalidated poset data as supplied by callers or parsed documents. The
 * unique minimal element "*" may be listed or left implicit; covers are
 * (upper, lower) id pairs. */
struct RawPoset {
  struct Element {
    std::string id;
    int rank = 0;
  };
  std::vector<Element> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

struct Violation {
  errc code;
  std::string message;
};

struct ValidationResult;

/* A finite ranked poset with unique minimal element "*" of rank 0. Element 0
 * is always "*"; the remaining elements are sorted by id. Every cover drops
 * rank by exactly one and every rank-1 element covers exactly "*". */
class RankedPoset {
public:
  /* Checks raw data and builds the poset; "*" is adjoined if absent and every
   * rank-1 element is given the cover to it. */
  static ValidationResult validate(const RawPoset& raw);

  /* Builds from data already known to satisfy the invariants (asserts). */
  static RankedPoset from_parts(const std::vector<std::pair<std::string, int>>& elements,
                                const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return static_cast<int>(ids_.size()); }
  int positive_size() const { return size() - 1; }
  /* Largest element rank; 0 for the poset {*} alone. */
  int poset_rank() const { return static_cast<int>(levels_.size()) - 1; }

  int star() const { return 0; }
  const std::string& id(int i) const { return ids_[i]; }
  int index(const std::string& id) const;
  std::optional<int> find(const std::string& id) const;
  int rank_of(int i) const { return rank_[i]; }

  /* Elements covered by i (one rank down) / covering i (one rank up). */
  const std::vector<int>& lower(int i) const { return lower_[i]; }
  const std::vector<int>& upper(int i) const { return upper_[i]; }
  bool has_cover(int up, int lo) const;

  const std::vector<int>& level(int r) const { return levels_[r]; }

  bool leq(int a, int b) const { return leq_[b][a]; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }

  std::vector<int> maximal() const;
  bool is_cyclic() const { return maximal().size() == 1; }
  bool is_pure() const;

  RawPoset to_raw() const;

  std::vector<int> positive_elements() const;

private:
  std::vector<std::string> ids_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> lower_, upper_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<bool>> leq_; // leq_[b][a] == (a <= b)
  std::unordered_map<std::string, int> index_;

  void finish(); // fills levels_, leq_, index_ after ids_/rank_/lower_/upper_
};

struct ValidationResult {
  std::optional<RankedPoset> poset;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/* A subset of a poset's elements, carrying its parent for order queries. */
struct Subposet {
  const RankedPoset* parent = nullptr;
  std::vector<int> members; // ascending indices
  std::optional<int> level; // common rank, when the subset is a level set

  bool contains(int i) const;
  int size() const { return static_cast<int>(members.size()); }
};

/* [*, x] as a standalone poset (ids preserved). */
RankedPoset principal_ideal(const RankedPoset& p, int x);

/* Union of principal ideals of W as a standalone poset. */
RankedPoset below(const RankedPoset& p, const std::vector<int>& w);

/* Elements of rank > k together with "*", ranks shifted down by k. */
RankedPoset truncate(const RankedPoset& p, int k);

/* Order-reversal of a cyclic poset. The old top becomes the new "*" and the
 * old "*" becomes the new top; those two elements swap id strings so that the
 * result is again a poset with minimal element "*". */
RankedPoset dual(const RankedPoset& p);

/* Disjoint union glued at "*", for posets of equal rank; ids get the
 * prefixes "1:" and "2:". */
RankedPoset wedge(const RankedPoset& a, const RankedPoset& b);

/* Adds one new top element covering every maximal element of a pure poset. */
RankedPoset adjoin_top(const RankedPoset& p);

/* Removes the top level of a pure poset. */
RankedPoset drop_top(const RankedPoset& p);

/* {w : w < a, rank(a) - rank(w) <= i - 1, w != *}, for 1 <= i <= rank(a). */
Subposet gamma_ai(const RankedPoset& p, int a, int i);

/* {y <= x : rank(y) = rank(x) - k}, for 0 <= k <= rank(x). */
Subposet sphere(const RankedPoset& p, int x, int k);

/* {z : a < z < b}. */
Subposet open_interval(const RankedPoset& p, int a, int b);

/* For a level set W of rank n and 0 <= k <= n - 1: the elements of the
 * ideal of W with rank between n - k and n ("*" excluded). */
Subposet layer_window(const RankedPoset& p, const std::vector<int>& w, int k);

/* All elements except "*". */
Subposet positive_part(const RankedPoset& p);

/* All elements of the ideal of W except "*". */
Subposet ideal_members(const RankedPoset& p, const std::vector<int>& w);

/* Connectivity of the cover graph restricted to the subset; the empty and
 * singleton subsets count as connected. */
bool hasse_connected(const Subposet& s);

/* Requires a level set: nonempty, all members of one rank. Returns the rank. */
int level_of(const RankedPoset& p, const std::vector<int>& w);

void require_cyclic(const RankedPoset& p, const std::string& op);

} // namespace pk
