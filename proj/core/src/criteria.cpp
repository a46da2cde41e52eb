#include "pk/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pk {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> groups_of(UnionFind& uf,
                                        const std::vector<int>& members) {
  std::vector<std::vector<int>> out;
  std::vector<std::pair<int, int>> tagged;
  for (int x : members) tagged.push_back({uf.find(x), x});
  std::sort(tagged.begin(), tagged.end());
  for (const auto& [root, x] : tagged) {
    if (out.empty() || uf.find(out.back().front()) != root) out.push_back({});
    out.back().push_back(x);
  }
  for (auto& g : out) std::sort(g.begin(), g.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

UniformResult is_uniform(const RankedPoset& p) {
  UniformResult res{true, {}};
  for (int x = 1; x < p.size(); ++x) {
    auto s1 = sphere(p, x, 1).members;
    UnionFind uf(p.size());
    for (size_t i = 0; i < s1.size(); ++i)
      for (size_t j = i + 1; j < s1.size(); ++j) {
        int u = s1[i], v = s1[j];
        const auto& lu = p.lower(u);
        bool shared = false;
        for (int w : p.lower(v))
          if (std::binary_search(lu.begin(), lu.end(), w)) {
            shared = true;
            break;
          }
        if (shared) uf.merge(u, v);
      }
    int classes = static_cast<int>(groups_of(uf, s1).size());
    if (classes > 1) {
      res.uniform = false;
      res.witnesses.push_back({p.id(x), classes});
    }
    // Cross-check against window connectivity for rank >= 3.
    if (p.rank_of(x) >= 3) {
      bool conn = hasse_connected(gamma_ai(p, x, 3));
      check(conn == (classes == 1), errc::bad_input,
            "uniformity formulations disagree at " + p.id(x));
    }
  }
  return res;
}

std::vector<std::vector<int>> simW_classes(const RankedPoset& p,
                                           const std::vector<int>& w) {
  level_of(p, w); // enforces nonempty level set
  UnionFind uf(p.size());
  for (int s : w) {
    const auto& lo = p.lower(s);
    for (size_t i = 1; i < lo.size(); ++i)
      if (lo[0] != p.star()) uf.merge(lo[0], lo[i]);
  }
  return groups_of(uf, p.positive_elements());
}

LevelSetFamily tm_sets(const RankedPoset& p) {
  require_cyclic(p, "level-family recursion");
  int top = p.poset_rank();
  LevelSetFamily fam;
  fam.t.assign(top + 1, {});
  fam.m.assign(top + 1, {});
  if (top == 0) return fam;

  fam.t[top] = {{p.maximal().front()}};
  for (int n = top - 1; n >= 1; --n) {
    std::set<std::vector<int>> collected;
    for (const auto& w : fam.t[n + 1]) {
      auto classes = simW_classes(p, w);
      std::set<int> covered;
      for (int s : w)
        for (int z : p.lower(s))
          if (z != p.star()) covered.insert(z);
      for (const auto& c : classes)
        for (int z : c)
          if (covered.count(z)) {
            collected.insert(c);
            break;
          }
    }
    fam.t[n].assign(collected.begin(), collected.end());
  }

  for (int n = 1; n <= top; ++n) {
    std::set<std::vector<int>> parts;
    for (const auto& w : fam.t[n]) {
      if (n == 1) {
        for (int s : w) parts.insert({s});
        continue;
      }
      auto window = layer_window(p, w, 1);
      // Components of the cover graph on the window, then group W by them.
      UnionFind uf(p.size());
      for (int x : window.members)
        for (int y : p.lower(x))
          if (window.contains(y)) uf.merge(x, y);
      std::vector<int> ws = w;
      std::sort(ws.begin(), ws.end());
      for (const auto& g : groups_of(uf, ws)) parts.insert(g);
    }
    fam.m[n].assign(parts.begin(), parts.end());
  }
  return fam;
}

std::vector<std::vector<int>> t_family_union(const RankedPoset& p) {
  std::set<std::vector<int>> acc;
  for (int x = 1; x < p.size(); ++x) {
    auto ideal = principal_ideal(p, x);
    auto fam = tm_sets(ideal);
    for (const auto& level : fam.t)
      for (const auto& w : level) {
        std::vector<int> global;
        for (int i : w) global.push_back(p.index(ideal.id(i)));
        std::sort(global.begin(), global.end());
        acc.insert(global);
      }
  }
  return {acc.begin(), acc.end()};
}

} // namespace pk
