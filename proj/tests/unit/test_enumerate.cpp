#include "doctest.h"

#include <random>
#include <set>
#include <string>
#include <vector>

#include "pk/canonical.hpp"
#include "pk/enumerate.hpp"
#include "pk/error.hpp"
#include "pk/fixtures.hpp"

namespace {

using namespace pk;

std::vector<RankedPoset> corpus(int max_elements) {
  EnumerationSpec spec;
  spec.max_elements = max_elements;
  return enumerate_cyclic(spec);
}

TEST_CASE("class counts grow as expected with the element bound") {
  CHECK(corpus(2).size() == 1);
  CHECK(corpus(3).size() == 2);
  CHECK(corpus(4).size() == 4);
  CHECK(corpus(5).size() == 8);
  CHECK(corpus(6).size() == 18);
  CHECK(corpus(7).size() == 46);
}

TEST_CASE("every generated poset is cyclic and within bounds") {
  for (const auto& p : corpus(6)) {
    CHECK(p.is_cyclic());
    CHECK(p.size() <= 6);
    CHECK(p.poset_rank() >= 1);
  }
}

TEST_CASE("representatives are pairwise non-isomorphic") {
  auto posets = corpus(6);
  std::set<std::string> forms;
  for (const auto& p : posets) forms.insert(canonical_form(p));
  CHECK(forms.size() == posets.size());
}

TEST_CASE("turning rejection off yields all labeled structures") {
  EnumerationSpec spec;
  spec.max_elements = 6;
  spec.reject_isomorphic = false;
  auto labeled = enumerate_cyclic(spec);
  CHECK(labeled.size() == 22);
  std::set<std::string> forms;
  for (const auto& p : labeled) forms.insert(canonical_form(p));
  CHECK(forms.size() == 18);
}

TEST_CASE("known fixtures appear exactly once") {
  auto hits = [](const std::vector<RankedPoset>& posets, const RankedPoset& q) {
    int n = 0;
    for (const auto& p : posets)
      if (isomorphic(p, q)) ++n;
    return n;
  };
  CHECK(hits(corpus(4), fixture("diamond")) == 1);
  CHECK(hits(corpus(6), fixture("pinch")) == 1);
  CHECK(hits(corpus(7), fixture("cycle4")) == 1);
  CHECK(hits(corpus(5), fixture("chain3")) == 1);
}

TEST_CASE("a profile filter pins the level widths") {
  EnumerationSpec spec;
  spec.profile = {2, 2, 1};
  auto posets = enumerate_cyclic(spec);
  REQUIRE(posets.size() == 3);
  int pinches = 0;
  for (const auto& p : posets) {
    CHECK(p.size() == 6);
    CHECK(p.poset_rank() == 3);
    if (isomorphic(p, fixture("pinch"))) ++pinches;
  }
  CHECK(pinches == 1);

  spec.profile = {2, 2};
  CHECK(enumerate_cyclic(spec).empty()); // two maximal elements, never cyclic
  spec.profile = {0, 1};
  CHECK_THROWS_AS(enumerate_cyclic(spec), error);
}

TEST_CASE("rank bounds restrict the corpus") {
  EnumerationSpec spec;
  spec.max_elements = 6;
  spec.max_rank = 2;
  for (const auto& p : enumerate_cyclic(spec)) CHECK(p.poset_rank() <= 2);
  spec.max_rank = 0;
  spec.min_rank = 4;
  for (const auto& p : enumerate_cyclic(spec)) CHECK(p.poset_rank() >= 4);
}

TEST_CASE("the budget cuts off long enumerations") {
  EnumerationSpec spec;
  spec.max_elements = 7;
  spec.budget = 10;
  CHECK_THROWS_AS(enumerate_cyclic(spec), error);
  try {
    enumerate_cyclic(spec);
  } catch (const error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
  spec.budget = 98; // the full labeled count at this bound
  CHECK(enumerate_cyclic(spec).size() == 46);
}

TEST_CASE("the streaming form can stop early") {
  EnumerationSpec spec;
  spec.max_elements = 7;
  long seen = 0;
  bool finished = enumerate_cyclic(spec, [&](RankedPoset, long idx) {
    CHECK(idx == seen);
    ++seen;
    return seen < 5;
  });
  CHECK_FALSE(finished);
  CHECK(seen == 5);
  seen = 0;
  finished = enumerate_cyclic(spec, [&](RankedPoset, long) {
    ++seen;
    return true;
  });
  CHECK(finished);
  CHECK(seen == 46);
}

TEST_CASE("random draws are reproducible and respect bounds") {
  std::mt19937_64 a(2024), b(2024);
  for (int i = 0; i < 40; ++i) {
    auto p = random_cyclic(a, 8, 3);
    auto q = random_cyclic(b, 8, 3);
    CHECK(canonical_form(p) == canonical_form(q));
    CHECK(p.size() <= 8);
    CHECK(p.poset_rank() <= 3);
    CHECK(p.is_cyclic());
  }
  std::mt19937_64 c(7);
  std::set<std::string> seen;
  for (int i = 0; i < 60; ++i) seen.insert(canonical_form(random_cyclic(c, 7)));
  CHECK(seen.size() > 5); // the sampler reaches many classes
}

} // namespace
