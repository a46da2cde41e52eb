#include <algorithm>

#include "doctest.h"
#include "pk/canonical.hpp"
#include "pk/fixtures.hpp"
#include "pk/poset.hpp"

using namespace pk;

namespace {

std::vector<int> ids_to_indices(const RankedPoset& p,
                                const std::vector<std::string>& ids) {
  std::vector<int> out;
  for (const auto& s : ids) out.push_back(p.index(s));
  std::sort(out.begin(), out.end());
  return out;
}

bool members_are(const Subposet& s, const std::vector<std::string>& ids) {
  return s.members == ids_to_indices(*s.parent, ids);
}

// Longest and shortest cover-path length from x down to "*".
std::pair<int, int> path_extremes(const RankedPoset& p, int x) {
  if (x == p.star()) return {0, 0};
  int lo = 1 << 20, hi = -1;
  for (int y : p.lower(x)) {
    auto [a, b] = path_extremes(p, y);
    lo = std::min(lo, a + 1);
    hi = std::max(hi, b + 1);
  }
  return {lo, hi};
}

} // namespace

TEST_CASE("validate accepts fixtures and reports shape") {
  auto p = fixture("cycle4");
  CHECK(p.size() == 6);
  CHECK(p.positive_size() == 5);
  CHECK(p.poset_rank() == 3);
  CHECK(p.is_cyclic());
  CHECK(p.is_pure());
  CHECK(p.id(0) == "*");
  CHECK(p.rank_of(p.index("u")) == 2);
  CHECK(p.leq(p.index("a"), p.index("t")));
  CHECK(p.leq(p.index("b"), p.index("u")));
  CHECK_FALSE(p.leq(p.index("u"), p.index("v")));
  CHECK(p.has_cover(p.index("u"), p.index("a")));
  CHECK_FALSE(p.has_cover(p.index("t"), p.index("a")));
}

TEST_CASE("validate violation reporting") {
  RawPoset raw;
  raw.elements = {{"a", 1}, {"a", 2}};
  auto r = RankedPoset::validate(raw);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].code == errc::duplicate_id);

  raw = {};
  raw.elements = {{"a", 1}, {"c", 3}};
  raw.covers = {{"c", "a"}};
  r = RankedPoset::validate(raw);
  REQUIRE_FALSE(r.ok());
  bool saw_gap = false, saw_dangling = false;
  for (const auto& v : r.violations) {
    saw_gap |= v.code == errc::rank_gap;
    saw_dangling |= v.code == errc::dangling_element;
  }
  CHECK(saw_gap);
  CHECK(saw_dangling); // after the gap is dropped, c covers nothing

  raw = {};
  raw.elements = {{"a", 1}};
  raw.covers = {{"a", "zz"}};
  r = RankedPoset::validate(raw);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].code == errc::unknown_id);

  raw = {};
  raw.elements = {{"*", 0}, {"a", 1}};
  raw.covers = {{"a", "*"}};
  r = RankedPoset::validate(raw);
  CHECK(r.ok());

  raw.elements[0].rank = 1;
  r = RankedPoset::validate(raw);
  CHECK_FALSE(r.ok());

  raw = {};
  raw.elements = {{"a", 0}};
  r = RankedPoset::validate(raw);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].code == errc::bad_input);
}

TEST_CASE("rank equals both extremes of cover-path length") {
  for (const auto& name : fixture_names()) {
    auto p = fixture(name);
    for (int x = 0; x < p.size(); ++x) {
      auto [lo, hi] = path_extremes(p, x);
      CHECK(lo == p.rank_of(x));
      CHECK(hi == p.rank_of(x));
    }
  }
}

TEST_CASE("principal ideal and truncation") {
  auto p = fixture("cycle4");
  auto ideal = principal_ideal(p, p.index("u"));
  CHECK(ideal.size() == 4);
  CHECK(isomorphic(ideal, fixture("diamond")));

  auto tr = truncate(p, 1);
  CHECK(tr.size() == 4);
  CHECK(tr.rank_of(tr.index("u")) == 1);
  CHECK(isomorphic(tr, fixture("diamond")));

  auto all = truncate(p, 0);
  CHECK(isomorphic(all, p));
  CHECK(truncate(p, 3).size() == 1);
  CHECK_THROWS_AS(truncate(p, 4), error);
}

TEST_CASE("ideal of a set") {
  auto p = fixture("cycle4");
  auto b = below(p, {p.index("u"), p.index("v")});
  CHECK(b.size() == 5);
  CHECK_FALSE(b.find("t"));
  CHECK_THROWS_AS(below(p, {}), error);
}

TEST_CASE("dual") {
  CHECK(isomorphic(dual(fixture("cycle4")), fixture("cycle4")));
  CHECK(isomorphic(dual(fixture("chain3")), fixture("chain3")));
  CHECK(isomorphic(dual(fixture("diamond")), fixture("diamond")));

  auto p = fixture("pinch");
  auto dd = dual(dual(p));
  CHECK(isomorphic(dd, p));
  // The double dual restores ids, including the swapped pair.
  for (int i = 0; i < p.size(); ++i) {
    CHECK(dd.find(p.id(i)));
    CHECK(dd.rank_of(dd.index(p.id(i))) == p.rank_of(i));
  }

  RawPoset two_tops;
  two_tops.elements = {{"a", 1}, {"b", 1}};
  auto np = *RankedPoset::validate(two_tops).poset;
  CHECK_THROWS_AS(dual(np), error);
}

TEST_CASE("wedge") {
  auto w = wedge(fixture("diamond"), fixture("diamond"));
  CHECK(w.size() == 7);
  CHECK(w.poset_rank() == 2);
  CHECK(w.maximal().size() == 2);
  CHECK(w.find("1:t"));
  CHECK(w.find("2:a"));
  CHECK_THROWS_AS(wedge(fixture("diamond"), fixture("chain3")), error);
  try {
    wedge(fixture("diamond"), fixture("chain3"));
  } catch (const error& e) {
    CHECK(e.code() == errc::rank_mismatch);
  }
}

TEST_CASE("adjoin and drop top") {
  auto d = fixture("diamond");
  auto up = adjoin_top(d);
  CHECK(up.size() == 5);
  CHECK(up.poset_rank() == 3);
  CHECK(up.is_cyclic());
  auto back = drop_top(up);
  CHECK(back.size() == d.size());
  for (int i = 0; i < d.size(); ++i) CHECK(back.find(d.id(i)));

  RawPoset mixed;
  mixed.elements = {{"a", 1}, {"b", 1}, {"t", 2}};
  mixed.covers = {{"t", "a"}};
  auto np = *RankedPoset::validate(mixed).poset;
  CHECK_FALSE(np.is_pure());
  CHECK_THROWS_AS(adjoin_top(np), error);
  CHECK_THROWS_AS(drop_top(np), error);

  auto wf = fixture("wedge");
  CHECK(wf.size() == 12);
  CHECK(wf.poset_rank() == 4);
  CHECK(wf.is_cyclic());
}

TEST_CASE("element windows") {
  auto p = fixture("cycle4");
  int t = p.index("t"), a = p.index("a");
  CHECK(members_are(gamma_ai(p, t, 2), {"u", "v"}));
  CHECK(members_are(gamma_ai(p, t, 3), {"a", "b", "u", "v"}));
  CHECK(gamma_ai(p, a, 1).members.empty());
  CHECK_THROWS_AS(gamma_ai(p, t, 0), error);
  CHECK_THROWS_AS(gamma_ai(p, t, 4), error);

  CHECK(members_are(sphere(p, t, 0), {"t"}));
  CHECK(members_are(sphere(p, t, 1), {"u", "v"}));
  CHECK(sphere(p, t, 3).members == std::vector<int>{p.star()});
  CHECK(sphere(p, t, 1).level == 2);

  CHECK(members_are(open_interval(p, p.star(), t), {"a", "b", "u", "v"}));
  CHECK(members_are(open_interval(p, a, t), {"u", "v"}));
  CHECK(open_interval(p, a, p.index("u")).members.empty());
  CHECK_THROWS_AS(open_interval(p, p.index("u"), p.index("v")), error);
}

TEST_CASE("layer windows over a level set") {
  auto p = fixture("cycle4");
  int t = p.index("t"), u = p.index("u"), v = p.index("v");
  CHECK(members_are(layer_window(p, {t}, 0), {"t"}));
  CHECK(members_are(layer_window(p, {t}, 1), {"t", "u", "v"}));
  CHECK(members_are(layer_window(p, {t}, 2), {"a", "b", "t", "u", "v"}));
  CHECK(members_are(layer_window(p, {u, v}, 1), {"a", "b", "u", "v"}));
  CHECK_THROWS_AS(layer_window(p, {}, 0), error);
  CHECK_THROWS_AS(layer_window(p, {u, t}, 0), error);
  CHECK_THROWS_AS(layer_window(p, {t}, 3), error);
  try {
    layer_window(p, {u, t}, 0);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_level);
  }
}

TEST_CASE("hasse connectivity") {
  auto p = fixture("cycle4");
  CHECK(hasse_connected(positive_part(p)));
  auto q = fixture("pinch");
  CHECK_FALSE(hasse_connected(gamma_ai(q, q.index("t"), 3)));
  Subposet empty{&p, {}, std::nullopt};
  CHECK(hasse_connected(empty));
}

TEST_CASE("canonical forms") {
  auto p = fixture("cycle4");
  RawPoset relabeled;
  relabeled.elements = {{"x", 1}, {"y", 1}, {"m", 2}, {"n", 2}, {"zz", 3}};
  relabeled.covers = {{"m", "x"}, {"m", "y"}, {"n", "x"},
                      {"n", "y"}, {"zz", "m"}, {"zz", "n"}};
  auto q = *RankedPoset::validate(relabeled).poset;
  CHECK(isomorphic(p, q));
  CHECK_FALSE(isomorphic(p, fixture("pinch")));

  auto ls = LevelStructure::of(p);
  CHECK(canonical_form(ls.build()) == canonical_form(p));
  CHECK(canonical_encode(ls) == canonical_form(p));
}
