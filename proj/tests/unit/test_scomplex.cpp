#include "doctest.h"

#include <string>
#include <vector>

#include "helpers.hpp"
#include "pk/fixtures.hpp"
#include "pk/scomplex.hpp"

using namespace pk;
using testposets::circle_top;

namespace {

const RationalField Q;
const PrimeField F2(2);

std::vector<int> indices_of(const RankedPoset& p,
                            const std::vector<std::string>& ids) {
  std::vector<int> out;
  for (const auto& s : ids) out.push_back(p.index(s));
  return out;
}

std::vector<RankedPoset> zoo() {
  std::vector<RankedPoset> out;
  for (const auto& name : fixture_names()) out.push_back(fixture(name));
  out.push_back(circle_top());
  out.push_back(dual(circle_top()));
  return out;
}

} // namespace

TEST_CASE("layer complex dims and differentials on fixtures") {
  auto d = fixture("diamond");
  auto sc = s_complex(Q, positive_part(d));
  CHECK(sc.dims == std::vector<int>{2, 1});
  REQUIRE(sc.d.size() == 1);
  CHECK(detail::matrix_rank(Q, sc.d[0]) == 1);
  REQUIRE(sc.layers[0].size() == 2);
  CHECK(sc.layers[0][0].chains == std::vector<std::vector<int>>{{}});
  CHECK(sc.layers[0][0].space.dim() == 1);

  auto pinch = fixture("pinch");
  int t = pinch.index("t");
  CHECK(s_complex(Q, layer_window(pinch, {t}, 2)).dims ==
        std::vector<int>{2, 0, 0});
  auto w1 = s_complex(Q, layer_window(pinch, {t}, 1));
  CHECK(w1.dims == std::vector<int>{2, 1});
  CHECK(cohomology_of(Q, w1.cochain()).cohomology == std::vector<int>{1, 0});

  auto c4 = fixture("cycle4");
  CHECK(s_complex(Q, positive_part(c4)).dims == std::vector<int>{2, 2, 1});
}

TEST_CASE("summand spaces match the top cohomology of the lower complex") {
  for (const auto& p : zoo()) {
    auto sc = s_complex(Q, positive_part(p));
    for (size_t j = 0; j < sc.layers.size(); ++j)
      for (const auto& sm : sc.layers[j]) {
        std::vector<int> bx;
        for (int z = 1; z < p.size(); ++z)
          if (p.lt(z, sm.element)) bx.push_back(z);
        auto dims = reduced_cohomology(Q, Subposet{&p, bx, std::nullopt});
        CHECK(sm.space.dim() ==
              cohomology_dim_at(dims, static_cast<int>(j) - 1));
      }
  }
}

TEST_CASE("layer complexes over the prime field share their shapes") {
  for (const auto& p : zoo()) {
    auto sq = s_complex(Q, positive_part(p));
    auto s2 = s_complex(F2, positive_part(p));
    CHECK(sq.dims == s2.dims);
    cohomology_of(F2, s2.cochain());
  }
}

TEST_CASE("dual of the circle poset has vanishing upper layers") {
  auto dct = dual(circle_top());
  auto sc = s_complex(Q, positive_part(dct));
  CHECK(sc.dims == std::vector<int>{2, 1, 0, 0});
  REQUIRE(!sc.d.empty());
  CHECK(detail::matrix_rank(Q, sc.d[0]) == 1);
}

TEST_CASE("psi comparison holds at every truncation depth") {
  for (const auto& p : zoo()) {
    for (int k = 0; k < p.poset_rank(); ++k) {
      auto rq = psi_check(Q, p, k);
      CHECK(rq.ok());
      CHECK(rq.s_dims == rq.block_dims);
      CHECK(psi_check(F2, p, k).ok());
    }
    CHECK_THROWS_AS(psi_check(Q, p, p.poset_rank()), error);
    CHECK_THROWS_AS(psi_check(Q, p, -1), error);
  }
}

TEST_CASE("psi dimensions on the diamond") {
  auto rep = psi_check(Q, fixture("diamond"), 0);
  CHECK(rep.s_dims == std::vector<int>{2, 1});
  CHECK(rep.block_dims == std::vector<int>{2, 1});
}

TEST_CASE("weak Cohen-Macaulay verdicts on fixtures") {
  for (const auto& name : fixture_names()) {
    auto p = fixture(name);
    CHECK(weakly_cm(Q, p).weakly_cm);
    CHECK(weakly_cm(F2, p).weakly_cm);
  }
}

TEST_CASE("literal depth policy keeps the bottom kernel") {
  auto r = weakly_cm(Q, fixture("pinch"), KPolicy::literal);
  CHECK_FALSE(r.weakly_cm);
  bool saw_k1 = false;
  for (const auto& w : r.witnesses) saw_k1 = saw_k1 || w.k == 1;
  CHECK(saw_k1);
  CHECK_FALSE(weakly_cm(Q, fixture("cycle4"), KPolicy::literal).weakly_cm);
}

TEST_CASE("circle poset fails exactly at the linked pair below the top") {
  auto ct = circle_top();
  auto r = weakly_cm(Q, ct);
  CHECK_FALSE(r.weakly_cm);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].element == "y");
  CHECK(r.witnesses[0].level == 3);
  CHECK(r.witnesses[0].w_ids == std::vector<std::string>{"s", "t"});
  CHECK(r.witnesses[0].k == 2);
  CHECK_FALSE(weakly_cm(F2, ct).weakly_cm);
  CHECK(weakly_cm(Q, dual(ct)).weakly_cm);
  CHECK(weakly_cm(F2, dual(ct)).weakly_cm);
}

TEST_CASE("weak Cohen-Macaulay verdict survives relabeling") {
  auto p = RankedPoset::from_parts(
      {{"p", 1}, {"q", 1}, {"r", 2}, {"s", 2}, {"z", 3}},
      {{"r", "p"}, {"r", "q"}, {"s", "p"}, {"s", "q"}, {"z", "r"}, {"z", "s"}});
  CHECK(weakly_cm(Q, p).weakly_cm);
}

TEST_CASE("window and ideal cohomology dimensions agree") {
  for (const auto& p : zoo()) {
    for (int x = 1; x < p.size(); ++x) {
      RankedPoset ideal = principal_ideal(p, x);
      auto fam = tm_sets(ideal);
      for (int n = 2; n <= ideal.poset_rank(); ++n)
        for (const auto& w : fam.m[n]) {
          std::vector<int> wg;
          for (int i : w) wg.push_back(p.index(ideal.id(i)));
          std::sort(wg.begin(), wg.end());
          for (int k = 2; k <= n - 1; ++k) {
            auto dq = window_vs_ideal(Q, p, wg, k);
            CHECK(dq.window_cohomology == dq.ideal_cohomology);
            auto d2 = window_vs_ideal(F2, p, wg, k);
            CHECK(d2.window_cohomology == d2.ideal_cohomology);
          }
        }
    }
  }
}

TEST_CASE("failing window dimension is computed both ways") {
  auto ct = circle_top();
  auto v = window_vs_ideal(Q, ct, indices_of(ct, {"s", "t"}), 2);
  CHECK(v.window_cohomology == 1);
  CHECK(v.ideal_cohomology == 1);
}

TEST_CASE("layer complex and window validation") {
  auto p = fixture("diamond");
  CHECK_THROWS_AS(s_complex(Q, Subposet{&p, {}, std::nullopt}), error);
  auto two = RankedPoset::from_parts({{"a", 1}, {"b", 1}}, {});
  CHECK_THROWS_AS(weakly_cm(Q, two), error);
  CHECK_THROWS_AS(window_vs_ideal(Q, p, {p.index("t")}, 1), error);
  auto pinch = fixture("pinch");
  CHECK_THROWS_AS(
      window_cohomology(Q, pinch, indices_of(pinch, {"a", "t"}), 1), error);
}
