#include "doctest.h"
#include "pk/field.hpp"
#include "pk/fixtures.hpp"
#include "pk/order_complex.hpp"
#include "pk/topology.hpp"

using namespace pk;

TEST_CASE("order complex face counts") {
  auto p = fixture("cycle4");
  OrderComplex oc(positive_part(p));
  CHECK(oc.max_size() == 3);
  CHECK(oc.faces(0).size() == 1);
  CHECK(oc.faces(1).size() == 5);
  CHECK(oc.faces(2).size() == 8);
  CHECK(oc.faces(3).size() == 4);

  Subposet empty{&p, {}, std::nullopt};
  OrderComplex eoc(empty);
  CHECK(eoc.max_size() == 0);
}

TEST_CASE("reduced cohomology of familiar spaces") {
  RationalField q;
  PrimeField f2(2);
  auto p = fixture("cycle4");

  // Cone (the positive part has a top): no reduced cohomology.
  auto cone = reduced_cohomology(q, positive_part(p));
  for (int h : cone.cohomology) CHECK(h == 0);

  // The open interval under the top is a circle.
  int t = p.index("t");
  auto circ = reduced_cohomology(q, open_interval(p, p.star(), t));
  CHECK(circ.lo == -1);
  CHECK(circ.cohomology == std::vector<int>{0, 0, 1});
  auto circ2 = reduced_cohomology(f2, open_interval(p, p.star(), t));
  CHECK(circ2.cohomology == std::vector<int>{0, 0, 1});

  // Two disjoint segments.
  auto pinch = fixture("pinch");
  auto segs = reduced_cohomology(
      q, open_interval(pinch, pinch.star(), pinch.index("t")));
  CHECK(segs.cohomology == std::vector<int>{0, 1, 0});

  // The empty complex carries one class in degree -1.
  Subposet empty{&p, {}, std::nullopt};
  auto e = reduced_cohomology(q, empty);
  CHECK(e.lo == -1);
  CHECK(e.cohomology == std::vector<int>{1});
}

TEST_CASE("interval Cohen-Macaulay decisions") {
  RationalField q;
  PrimeField f2(2);
  CHECK(is_cm(q, fixture("chain3")).cm);
  CHECK(is_cm(q, fixture("diamond")).cm);
  CHECK(is_cm(q, fixture("cycle4")).cm);
  CHECK(is_cm(f2, fixture("cycle4")).cm);

  auto bad = is_cm(q, fixture("pinch"));
  CHECK_FALSE(bad.cm);
  REQUIRE_FALSE(bad.witnesses.empty());
  CHECK(bad.witnesses[0].lower == "*");
  CHECK(bad.witnesses[0].upper == "t");
  CHECK(bad.witnesses[0].degree == 0);
  CHECK(bad.witnesses[0].dim == 1);

  CHECK_FALSE(is_cm(q, fixture("wedge")).cm);
  CHECK_THROWS_AS(is_cm(q, wedge(fixture("diamond"), fixture("diamond"))),
                  error);
}

TEST_CASE("window form matches the interval form on fixtures") {
  RationalField q;
  PrimeField f2(2);
  for (const auto& name : fixture_names()) {
    auto p = fixture(name);
    if (!p.is_cyclic()) continue;
    CHECK(is_cm(q, p).cm == is_cm_alt(q, p).cm);
    CHECK(is_cm(f2, p).cm == is_cm_alt(f2, p).cm);
  }
}
