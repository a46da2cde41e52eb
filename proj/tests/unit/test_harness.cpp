#include "doctest.h"

#include <string>
#include <vector>

#include "harness/document.hpp"
#include "harness/report.hpp"
#include "harness/search.hpp"
#include "harness/sweep.hpp"
#include "pk/canonical.hpp"
#include "pk/error.hpp"
#include "pk/fixtures.hpp"

namespace {

using namespace pk;
using namespace pk::harness;

TEST_CASE("documents round-trip byte-identically") {
  for (const auto& name : fixture_names()) {
    auto doc = PosetDocument::of(fixture(name), name);
    auto text = serialize_document(doc);
    auto back = parse_document(text);
    CHECK(serialize_document(back) == text);
    CHECK(canonical_form(back.build()) == canonical_form(fixture(name)));
  }
}

TEST_CASE("the parser rejects malformed documents") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_document(text), error);
  };
  bad("not json");
  bad("[1,2]");
  bad(R"({"name":"x","elements":[],"covers":[],"bogus":0})");
  bad(R"({"elements":[],"covers":[]})");
  bad(R"({"name":"x","covers":[]})");
  bad(R"({"name":"x","elements":[{"id":"*","rank":1}],"covers":[]})");
  bad(R"({"name":"x","elements":[{"id":"a","rank":0}],"covers":[]})");
  bad(R"({"name":"x","elements":[{"id":"a","rank":1,"color":2}],"covers":[]})");
  bad(R"({"name":"x","elements":[{"id":"a","rank":true}],"covers":[]})");
  bad(R"({"name":"x","elements":[],"covers":[["a"]]})");
  bad(R"({"name":"x","elements":[],"covers":[[1,2]]})");
  bad(R"({"name":"x","field":"gf:6","elements":[],"covers":[]})");
}

TEST_CASE("documents default to rational coefficients") {
  auto doc = parse_document(
      R"({"name":"d","elements":[{"id":"a","rank":1}],"covers":[]})");
  CHECK(doc.field == FieldSpec::rational());
  CHECK(doc.build().size() == 2);
}

TEST_CASE("building a bad document throws its first violation") {
  auto doc = parse_document(
      R"({"name":"d","elements":[{"id":"a","rank":2}],"covers":[]})");
  CHECK_THROWS_AS(doc.build(), error);
}

TEST_CASE("fixture pseudo-paths load") {
  auto doc = load_document("fixture:diamond");
  CHECK(doc.name == "diamond");
  CHECK(doc.build().size() == 4);
  CHECK_THROWS_AS(load_document("fixture:zzz"), error);
  CHECK_THROWS_AS(load_document("/no/such/file.json"), error);
}

TEST_CASE("analysis of the pinched fixture") {
  auto rep = analyze(fixture("pinch"), "pinch", FieldSpec::rational());
  CHECK(rep.cyclic);
  CHECK(rep.rank == 3);
  CHECK_FALSE(rep.uniform);
  REQUIRE(rep.cm.has_value());
  CHECK_FALSE(*rep.cm);
  REQUIRE(rep.weakly_cm.has_value());
  CHECK(*rep.weakly_cm);
  CHECK(rep.koszul);
  CHECK(rep.hilbert_algebra == std::vector<long>{1, 5, 1});
  CHECK(rep.hilbert_match);
  CHECK(rep.consistent);
  CHECK_FALSE(rep.uniform_witnesses.empty());
  CHECK(rep.wcm_witnesses.empty());
  CHECK_FALSE(rep.annihilators.empty());
  for (const auto& row : rep.annihilators) {
    CHECK(row.equal);
    CHECK(row.closed_form_agrees);
  }
}

TEST_CASE("posets without a unique top get null cm verdicts") {
  auto w = wedge(fixture("diamond"), fixture("diamond"));
  auto rep = analyze(w, "pair", FieldSpec::gf(2));
  CHECK_FALSE(rep.cyclic);
  CHECK_FALSE(rep.cm.has_value());
  CHECK_FALSE(rep.weakly_cm.has_value());
  CHECK(rep.koszul);
  CHECK(rep.consistent);
  auto j = report_to_json(rep);
  CHECK(j["verdicts"]["cm"].is_null());
  CHECK(j["verdicts"]["weakly_cm"].is_null());
  CHECK(j["verdicts"]["koszul"].get<bool>());
}

TEST_CASE("the sweep is clean and independent of jobs") {
  SweepConfig cfg;
  cfg.enumeration.max_elements = 5;
  auto one = run_sweep(cfg);
  CHECK(one.posets == 8);
  CHECK(one.checks == 16);
  CHECK(one.ok());
  cfg.jobs = 3;
  auto three = run_sweep(cfg);
  CHECK(sweep_to_json(cfg, three) == sweep_to_json(cfg, one));
}

TEST_CASE("random sweeps are reproducible") {
  SweepConfig cfg;
  cfg.enumeration.max_elements = 6;
  cfg.enumeration.max_rank = 3;
  cfg.random_count = 10;
  cfg.seed = 99;
  auto a = run_sweep(cfg);
  cfg.jobs = 2;
  auto b = run_sweep(cfg);
  CHECK(a.ok());
  CHECK(a.posets == 10);
  CHECK(sweep_to_json(cfg, a) == sweep_to_json(cfg, b));
}

TEST_CASE("the non-uniform search lands on the pinch class") {
  auto hit = run_search(named_search("wcm-not-uniform"));
  REQUIRE(hit.has_value());
  CHECK(hit->poset.size() == 6);
  CHECK(hit->poset.poset_rank() == 3);
  CHECK(isomorphic(hit->poset, fixture("pinch")));
  CHECK(*hit->report.weakly_cm);
  CHECK_FALSE(hit->report.uniform);
  CHECK(hit->report.consistent);
}

TEST_CASE("the rank-four searches succeed within bounds") {
  auto b = run_search(named_search("uniform-not-koszul"));
  REQUIRE(b.has_value());
  CHECK(b->poset.size() <= 12);
  CHECK(b->poset.poset_rank() == 4);
  CHECK(b->report.uniform);
  CHECK_FALSE(b->report.koszul);
  REQUIRE(b->report.weakly_cm.has_value());
  CHECK_FALSE(*b->report.weakly_cm);
  CHECK(b->report.consistent);

  auto c = run_search(named_search("wcm-dual-not-wcm"));
  REQUIRE(c.has_value());
  CHECK(*c->report.weakly_cm);
  CHECK(c->report.consistent);
  auto flipped = analyze(dual(c->poset), "flipped", FieldSpec::rational());
  REQUIRE(flipped.weakly_cm.has_value());
  CHECK_FALSE(*flipped.weakly_cm);
}

TEST_CASE("the generic report predicate works on small bounds") {
  EnumerationSpec spec;
  spec.max_elements = 4;
  auto hit = search_witness(
      [](const AnalysisReport& r) { return r.rank == 2 && r.elements == 4; },
      FieldSpec::rational(), KPolicy::derived, spec);
  REQUIRE(hit.has_value());
  CHECK(isomorphic(hit->poset, fixture("diamond")));
  CHECK(hit->report.consistent);
}

} // namespace
