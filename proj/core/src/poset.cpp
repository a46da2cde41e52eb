#include "pk/poset.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace pk {

namespace {

const std::string kStar = "*";

} // namespace

int RankedPoset::index(const std::string& id) const {
  auto it = index_.find(id);
  check(it != index_.end(), errc::unknown_id, "unknown element id: " + id);
  return it->second;
}

std::optional<int> RankedPoset::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RankedPoset::has_cover(int up, int lo) const {
  const auto& l = lower_[up];
  return std::binary_search(l.begin(), l.end(), lo);
}

std::vector<int> RankedPoset::maximal() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (upper_[i].empty()) out.push_back(i);
  return out;
}

bool RankedPoset::is_pure() const {
  int top = poset_rank();
  for (int i : maximal())
    if (rank_[i] != top) return false;
  return true;
}

void RankedPoset::finish() {
  int n = size();
  index_.clear();
  for (int i = 0; i < n; ++i) index_[ids_[i]] = i;
  for (int i = 0; i < n; ++i) {
    std::sort(lower_[i].begin(), lower_[i].end());
    std::sort(upper_[i].begin(), upper_[i].end());
  }
  int top = 0;
  for (int r : rank_) top = std::max(top, r);
  levels_.assign(top + 1, {});
  for (int i = 0; i < n; ++i) levels_[rank_[i]].push_back(i);

  leq_.assign(n, std::vector<bool>(n, false));
  // Indices sorted by rank; propagate downward closure along covers.
  std::vector<int> by_rank(n);
  for (int i = 0; i < n; ++i) by_rank[i] = i;
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int a, int b) { return rank_[a] < rank_[b]; });
  for (int b : by_rank) {
    leq_[b][b] = true;
    for (int a : lower_[b])
      for (int x = 0; x < n; ++x)
        if (leq_[a][x]) leq_[b][x] = true;
  }
}

ValidationResult RankedPoset::validate(const RawPoset& raw) {
  ValidationResult res;
  auto bad = [&](errc c, std::string msg) {
    res.violations.push_back({c, std::move(msg)});
  };

  std::map<std::string, int> rank_by_id;
  bool saw_star = false;
  for (const auto& el : raw.elements) {
    if (rank_by_id.count(el.id)) {
      bad(errc::duplicate_id, "duplicate element id: " + el.id);
      continue;
    }
    if (el.id == kStar) {
      saw_star = true;
      if (el.rank != 0) bad(errc::bad_input, "\"*\" must have rank 0");
      rank_by_id[el.id] = 0;
      continue;
    }
    if (el.id.empty()) {
      bad(errc::bad_input, "empty element id");
      continue;
    }
    if (el.rank < 1) {
      bad(errc::bad_input, "element " + el.id + " has rank " +
                               std::to_string(el.rank) + "; ranks start at 1");
      continue;
    }
    rank_by_id[el.id] = el.rank;
  }
  (void)saw_star;
  rank_by_id[kStar] = 0;

  std::set<std::pair<std::string, std::string>> cover_set;
  for (const auto& [up, lo] : raw.covers) {
    auto iu = rank_by_id.find(up);
    auto il = rank_by_id.find(lo);
    if (iu == rank_by_id.end()) {
      bad(errc::unknown_id, "cover references unknown id: " + up);
      continue;
    }
    if (il == rank_by_id.end()) {
      bad(errc::unknown_id, "cover references unknown id: " + lo);
      continue;
    }
    if (iu->second != il->second + 1) {
      bad(errc::rank_gap, "cover " + up + " -> " + lo + " joins ranks " +
                              std::to_string(iu->second) + " and " +
                              std::to_string(il->second));
      continue;
    }
    cover_set.insert({up, lo});
  }
  for (const auto& [id, r] : rank_by_id)
    if (r == 1) cover_set.insert({id, kStar});

  // Everything above rank 1 needs at least one cover.
  std::set<std::string> covering;
  for (const auto& [up, lo] : cover_set) covering.insert(up);
  for (const auto& [id, r] : rank_by_id)
    if (r >= 2 && !covering.count(id))
      bad(errc::dangling_element, "element " + id + " of rank " +
                                      std::to_string(r) + " covers nothing");

  if (!res.violations.empty()) return res;

  RankedPoset p;
  p.ids_.push_back(kStar);
  for (const auto& [id, r] : rank_by_id)
    if (id != kStar) p.ids_.push_back(id);
  std::sort(p.ids_.begin() + 1, p.ids_.end());
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(p.ids_.size()); ++i) idx[p.ids_[i]] = i;
  p.rank_.resize(p.ids_.size());
  for (const auto& [id, r] : rank_by_id) p.rank_[idx[id]] = r;
  p.lower_.assign(p.ids_.size(), {});
  p.upper_.assign(p.ids_.size(), {});
  for (const auto& [up, lo] : cover_set) {
    p.lower_[idx[up]].push_back(idx[lo]);
    p.upper_[idx[lo]].push_back(idx[up]);
  }
  p.finish();

  // With the checks above every element reaches "*" along covers, so this
  // only guards internal consistency.
  for (int i = 0; i < p.size(); ++i)
    if (!p.leq(p.star(), i))
      bad(errc::no_upward_path, "element " + p.ids_[i] + " is not above \"*\"");
  if (!res.violations.empty()) return res;

  res.poset = std::move(p);
  return res;
}

RankedPoset RankedPoset::from_parts(
    const std::vector<std::pair<std::string, int>>& elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  RawPoset raw;
  for (const auto& [id, r] : elements) raw.elements.push_back({id, r});
  raw.covers = covers;
  auto res = validate(raw);
  assert(res.ok());
  check(res.ok(), errc::bad_input, res.violations.empty()
                                       ? std::string("invalid poset")
                                       : res.violations.front().message);
  return *std::move(res.poset);
}

RawPoset RankedPoset::to_raw() const {
  RawPoset raw;
  for (int i = 1; i < size(); ++i) raw.elements.push_back({ids_[i], rank_[i]});
  for (int i = 1; i < size(); ++i)
    for (int lo : lower_[i])
      if (lo != star()) raw.covers.push_back({ids_[i], ids_[lo]});
  return raw;
}

std::vector<int> RankedPoset::positive_elements() const {
  std::vector<int> out(size() - 1);
  for (int i = 1; i < size(); ++i) out[i - 1] = i;
  return out;
}

bool Subposet::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

namespace {

RankedPoset induced(const RankedPoset& p, const std::vector<bool>& keep,
                    int rank_shift = 0) {
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i < p.size(); ++i) {
    if (!keep[i]) continue;
    elements.push_back({p.id(i), p.rank_of(i) - rank_shift});
    for (int lo : p.lower(i))
      if (lo != p.star() && keep[lo]) covers.push_back({p.id(i), p.id(lo)});
  }
  return RankedPoset::from_parts(elements, covers);
}

} // namespace

RankedPoset principal_ideal(const RankedPoset& p, int x) {
  std::vector<bool> keep(p.size(), false);
  for (int i = 0; i < p.size(); ++i) keep[i] = p.leq(i, x);
  return induced(p, keep);
}

RankedPoset below(const RankedPoset& p, const std::vector<int>& w) {
  check(!w.empty(), errc::empty_argument, "ideal of an empty set");
  std::vector<bool> keep(p.size(), false);
  for (int s : w)
    for (int i = 0; i < p.size(); ++i)
      if (p.leq(i, s)) keep[i] = true;
  return induced(p, keep);
}

RankedPoset truncate(const RankedPoset& p, int k) {
  check(k >= 0 && k <= p.poset_rank(), errc::bad_input,
        "truncation depth " + std::to_string(k) + " outside [0, " +
            std::to_string(p.poset_rank()) + "]");
  std::vector<bool> keep(p.size(), false);
  for (int i = 1; i < p.size(); ++i) keep[i] = p.rank_of(i) > k;
  return induced(p, keep, k);
}

void require_cyclic(const RankedPoset& p, const std::string& op) {
  if (p.is_cyclic()) return;
  auto mx = p.maximal();
  std::string msg = op + " needs a unique maximal element; found";
  for (int m : mx) msg += " " + p.id(m);
  fail(errc::not_cyclic, msg);
}

RankedPoset dual(const RankedPoset& p) {
  require_cyclic(p, "dual");
  int top = p.maximal().front();
  int m1 = p.poset_rank();
  auto name = [&](int i) -> std::string {
    if (i == p.star()) return p.id(top); // old "*" takes the old top's id
    return p.id(i);
  };
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < p.size(); ++i) {
    if (i == top) continue; // becomes the new "*"
    elements.push_back({name(i), m1 - p.rank_of(i)});
  }
  for (int i = 0; i < p.size(); ++i)
    for (int lo : p.lower(i)) {
      // Old cover i -> lo reverses; new covers onto "*" are implicit.
      if (i == top) continue;
      covers.push_back({name(lo), name(i)});
    }
  return RankedPoset::from_parts(elements, covers);
}

RankedPoset wedge(const RankedPoset& a, const RankedPoset& b) {
  check(a.poset_rank() == b.poset_rank(), errc::rank_mismatch,
        "wedge of posets of ranks " + std::to_string(a.poset_rank()) +
            " and " + std::to_string(b.poset_rank()));
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  auto add = [&](const RankedPoset& p, const std::string& prefix) {
    for (int i = 1; i < p.size(); ++i) {
      elements.push_back({prefix + p.id(i), p.rank_of(i)});
      for (int lo : p.lower(i))
        if (lo != p.star()) covers.push_back({prefix + p.id(i), prefix + p.id(lo)});
    }
  };
  add(a, "1:");
  add(b, "2:");
  return RankedPoset::from_parts(elements, covers);
}

RankedPoset adjoin_top(const RankedPoset& p) {
  check(p.is_pure(), errc::not_pure, "adjoining a top to a non-pure poset");
  std::string top_id = "^";
  while (p.find(top_id)) top_id += "^";
  auto raw = p.to_raw();
  std::vector<std::pair<std::string, int>> elements;
  for (const auto& el : raw.elements) elements.push_back({el.id, el.rank});
  elements.push_back({top_id, p.poset_rank() + 1});
  for (int m : p.maximal())
    if (m != p.star()) raw.covers.push_back({top_id, p.id(m)});
  // Adjoining to {*} alone makes top_id a rank-1 element whose cover onto
  // "*" is implicit.
  return RankedPoset::from_parts(elements, raw.covers);
}

RankedPoset drop_top(const RankedPoset& p) {
  check(p.is_pure(), errc::not_pure, "dropping the top of a non-pure poset");
  check(p.poset_rank() >= 1, errc::bad_input, "dropping the top of {*}");
  std::vector<bool> keep(p.size(), false);
  for (int i = 1; i < p.size(); ++i) keep[i] = p.rank_of(i) < p.poset_rank();
  return induced(p, keep);
}

Subposet gamma_ai(const RankedPoset& p, int a, int i) {
  int ra = p.rank_of(a);
  check(i >= 1 && i <= ra, errc::bad_input,
        "window depth " + std::to_string(i) + " outside [1, " +
            std::to_string(ra) + "] at " + p.id(a));
  Subposet s{&p, {}, std::nullopt};
  for (int w = 1; w < p.size(); ++w)
    if (p.lt(w, a) && ra - p.rank_of(w) <= i - 1) s.members.push_back(w);
  return s;
}

Subposet sphere(const RankedPoset& p, int x, int k) {
  int rx = p.rank_of(x);
  check(k >= 0 && k <= rx, errc::bad_input,
        "sphere depth " + std::to_string(k) + " outside [0, " +
            std::to_string(rx) + "] at " + p.id(x));
  Subposet s{&p, {}, rx - k};
  for (int y : p.level(rx - k))
    if (p.leq(y, x)) s.members.push_back(y);
  return s;
}

Subposet open_interval(const RankedPoset& p, int a, int b) {
  check(p.lt(a, b), errc::bad_input,
        "open interval needs " + p.id(a) + " < " + p.id(b));
  Subposet s{&p, {}, std::nullopt};
  for (int z = 0; z < p.size(); ++z)
    if (p.lt(a, z) && p.lt(z, b)) s.members.push_back(z);
  return s;
}

int level_of(const RankedPoset& p, const std::vector<int>& w) {
  check(!w.empty(), errc::empty_argument, "empty level set");
  int n = p.rank_of(w.front());
  for (int s : w)
    check(p.rank_of(s) == n, errc::not_level,
          "elements " + p.id(w.front()) + " and " + p.id(s) +
              " have different ranks");
  return n;
}

Subposet layer_window(const RankedPoset& p, const std::vector<int>& w, int k) {
  int n = level_of(p, w);
  check(k >= 0 && k <= n - 1, errc::bad_input,
        "window depth " + std::to_string(k) + " outside [0, " +
            std::to_string(n - 1) + "]");
  std::vector<bool> in_ideal(p.size(), false);
  for (int s : w)
    for (int i = 0; i < p.size(); ++i)
      if (p.leq(i, s)) in_ideal[i] = true;
  Subposet s{&p, {}, std::nullopt};
  for (int y = 1; y < p.size(); ++y)
    if (in_ideal[y] && p.rank_of(y) >= n - k) s.members.push_back(y);
  return s;
}

Subposet positive_part(const RankedPoset& p) {
  return {&p, p.positive_elements(), std::nullopt};
}

Subposet ideal_members(const RankedPoset& p, const std::vector<int>& w) {
  check(!w.empty(), errc::empty_argument, "ideal of an empty set");
  std::vector<bool> in_ideal(p.size(), false);
  for (int s : w)
    for (int i = 0; i < p.size(); ++i)
      if (p.leq(i, s)) in_ideal[i] = true;
  Subposet s{&p, {}, std::nullopt};
  for (int y = 1; y < p.size(); ++y)
    if (in_ideal[y]) s.members.push_back(y);
  return s;
}

bool hasse_connected(const Subposet& s) {
  if (s.members.size() <= 1) return true;
  const RankedPoset& p = *s.parent;
  std::vector<int> comp(s.members.size(), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    int x = s.members[i];
    auto visit = [&](int y) {
      auto it = std::lower_bound(s.members.begin(), s.members.end(), y);
      if (it == s.members.end() || *it != y) return;
      int j = static_cast<int>(it - s.members.begin());
      if (comp[j] == -1) {
        comp[j] = 0;
        stack.push_back(j);
      }
    };
    for (int y : p.lower(x)) visit(y);
    for (int y : p.upper(x)) visit(y);
  }
  for (int c : comp)
    if (c == -1) return false;
  return true;
}

} // namespace pk
