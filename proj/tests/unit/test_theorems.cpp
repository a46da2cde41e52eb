#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "pk/fixtures.hpp"
#include "pk/theorems.hpp"

using namespace pk;
using testposets::circle_top;

namespace {

const RationalField Q;
const PrimeField F2(2);

} // namespace

TEST_CASE("fixture reports are consistent over both fields") {
  for (const auto& name : fixture_names()) {
    auto p = fixture(name);
    auto rq = verify_theorems(Q, p);
    CHECK(rq.ok());
    CHECK(verify_theorems(F2, p).ok());
  }
}

TEST_CASE("pinch verdict profile") {
  auto r = verify_theorems(Q, fixture("pinch"));
  CHECK(r.ok());
  CHECK(r.cyclic);
  CHECK(r.wcm);
  CHECK(r.koszul);
  CHECK_FALSE(r.uniform);
  CHECK_FALSE(r.cm);
}

TEST_CASE("cycle4 verdict profile") {
  auto r = verify_theorems(Q, fixture("cycle4"));
  CHECK(r.ok());
  CHECK(r.uniform);
  CHECK(r.cm);
  CHECK(r.wcm);
  CHECK(r.koszul);
}

TEST_CASE("circle poset and its dual stay consistent") {
  auto r = verify_theorems(Q, circle_top());
  CHECK(r.ok());
  CHECK(r.uniform);
  CHECK_FALSE(r.koszul);
  CHECK_FALSE(r.wcm);
  CHECK_FALSE(r.cm);
  CHECK(verify_theorems(F2, circle_top()).ok());

  auto rd = verify_theorems(Q, dual(circle_top()));
  CHECK(rd.ok());
  CHECK(rd.wcm);
  CHECK(rd.koszul);
  CHECK_FALSE(rd.uniform);
  CHECK_FALSE(rd.cm);
}

TEST_CASE("non-cyclic posets reduce through their ideals") {
  auto p = drop_top(fixture("wedge"));
  auto r = verify_theorems(Q, p);
  CHECK(r.ok());
  CHECK_FALSE(r.cyclic);
  CHECK(r.pure);
  CHECK(r.koszul);

  auto rc = verify_theorems(Q, wedge(circle_top(), circle_top()));
  CHECK(rc.ok());
  CHECK_FALSE(rc.koszul);
}
