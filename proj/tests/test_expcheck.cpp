// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "finapp/expcheck.hpp"
#include "finapp/exponential.hpp"
#include "support/testkit.hpp"

using namespace finapp;

namespace {

const Cost kInfC = Cost::infinity();
Cost q(const char* t) { return parse_cost(t); }

ApproachSpace from_rows(PointSet pts, std::initializer_list<const char*> entries) {
  std::vector<Cost> e;
  for (const char* t : entries) e.push_back(q(t));
  return ApproachSpace::from_matrix(NumRel(pts, pts, std::move(e)));
}

ApproachSpace line_sorted() {
  return from_rows(PointSet{"0", "1/2", "1"},
                   {"0", "1/2", "1", "1/2", "0", "1/2", "1", "1/2", "0"});
}

ApproachSpace line_fixture_order() {
  return from_rows(PointSet{"0", "1", "1/2"},
                   {"0", "1", "1/2", "1", "0", "1/2", "1/2", "1/2", "0"});
}

void all_three_agree(const ApproachSpace& s, bool expected) {
  CHECK(check_exponentiable_exact(s).exponentiable == expected);
  CHECK(check_exponentiable_grid(s, dense_grid(s)).exponentiable == expected);
  CHECK(classify_finite(s).exponentiable == expected);
}

}  // namespace

TEST_CASE("passing spaces") {
  all_three_agree(ApproachSpace::one_point(), true);
  all_three_agree(ApproachSpace::discrete(testkit::letters(4)), true);
  std::vector<bool> chain{true, true, true, true,  //
                          false, true, true, true,  //
                          false, false, true, true,  //
                          false, false, false, true};
  all_three_agree(ApproachSpace::from_preorder(testkit::letters(4), chain), true);

  ExpReport r = check_exponentiable_exact(ApproachSpace::discrete(testkit::letters(3)));
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.pairs_examined == 9);
}

TEST_CASE("symmetric 2-point space") {
  ApproachSpace s = from_rows(PointSet{"p", "q"}, {"0", "1", "1", "0"});
  all_three_agree(s, false);
  ExpReport r = check_exponentiable_exact(s);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->z == 0);
  CHECK(r.witness->x0 == 1);
  CHECK(r.witness->u == q("1/2"));
  CHECK(r.witness->v == q("1/2"));
  CHECK(r.witness->lhs == Cost{1});
  CHECK(r.witness->rhs == q("3/2"));

  ExpReport g = check_exponentiable_grid(s, testkit::costs({"0", "1/4", "1/2", "3/4", "1", "2", "inf"}));
  CHECK_FALSE(g.exponentiable);
  CHECK_FALSE(criterion_sides(s, 0, 1, q("1/2"), q("1/2")).holds());

  ExpReport c = classify_finite(s);
  REQUIRE(c.offending_entry.has_value());
  CHECK(*c.offending_entry == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("3-point line") {
  ApproachSpace s = line_sorted();
  CriterionSides at = criterion_sides(s, 0, 2, q("1/4"), q("3/4"));
  CHECK(at.lhs == Cost{1});
  CHECK(at.rhs == q("5/4"));
  CHECK(at.argmin_y == 1);
  // the three y-terms, one by one
  CHECK(join(q("1/4"), s.conv(0, 2)) + join(q("3/4"), s.conv(0, 0)) == q("7/4"));
  CHECK(join(q("1/4"), s.conv(1, 2)) + join(q("3/4"), s.conv(0, 1)) == q("5/4"));
  CHECK(join(q("1/4"), s.conv(2, 2)) + join(q("3/4"), s.conv(0, 2)) == q("5/4"));

  auto gaps = criterion_gaps(s, 0, 2);
  REQUIRE(gaps.size() == 2);
  CHECK(gaps[0].lo == Cost{0});
  CHECK(gaps[0].hi == q("1/2"));
  CHECK(gaps[1].lo == q("1/2"));
  CHECK(gaps[1].hi == Cost{1});

  SUBCASE("witness in fixture order") {
    ExpReport r = check_exponentiable_exact(line_fixture_order());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->z == 0);
    CHECK(r.witness->x0 == 1);
    CHECK(r.witness->u == q("1/4"));
    CHECK(r.witness->v == q("3/4"));
    CHECK(r.witness->lhs == Cost{1});
    CHECK(r.witness->rhs == q("5/4"));
  }

  SUBCASE("midpoint of a covered pair need not fail") {
    CHECK(criterion_sides(s, 0, 2, q("1/2"), q("1/2")).holds());
  }
}

TEST_CASE("gaps are empty exactly for 0 and infinite entries") {
  ApproachSpace s = from_rows(PointSet{"a", "b", "c"},
                              {"0", "inf", "inf", "inf", "0", "0", "inf", "inf", "0"});
  for (std::size_t z = 0; z < 3; ++z)
    for (std::size_t x = 0; x < 3; ++x) CHECK(criterion_gaps(s, z, x).empty());
}

TEST_CASE("grid with only 0 and infinity is sound") {
  std::mt19937_64 rng(kDefaultSeed + 30);
  const auto coarse = testkit::costs({"0", "inf"});
  for (int i = 0; i < 100; ++i) {
    ApproachSpace s = random_space(1 + draw_index(rng, 5), testkit::criterion_pool(), rng);
    if (!check_exponentiable_grid(s, coarse).exponentiable) {
      CHECK_FALSE(check_exponentiable_exact(s).exponentiable);
    }
  }
}

TEST_CASE("the three deciders agree on random spaces") {
  std::mt19937_64 rng(kDefaultSeed + 31);
  int failing = 0;
  for (int i = 0; i < 150; ++i) {
    const auto& pool = (i % 3 == 0) ? testkit::costs({"0", "inf"}) : testkit::criterion_pool();
    ApproachSpace s = random_space(1 + draw_index(rng, 5), pool, rng);
    const bool verdict = check_exponentiable_exact(s).exponentiable;
    all_three_agree(s, verdict);
    if (!verdict) ++failing;
    ExpReport g = check_exponentiable_grid(s, dense_grid(s));
    if (g.witness) CHECK(g.witness->rhs > g.witness->lhs);
  }
  CHECK(failing > 30);
}

TEST_CASE("sampled violations land inside reported gaps") {
  std::mt19937_64 rng(kDefaultSeed + 32);
  for (int i = 0; i < 30; ++i) {
    ApproachSpace s = random_space(2 + draw_index(rng, 3), testkit::criterion_pool(), rng);
    const auto m = testkit::to_fx(s);
    for (int k = 0; k < 400; ++k) {
      const testkit::Fx u = static_cast<testkit::Fx>(draw_index(rng, 4 * testkit::kScale));
      const testkit::Fx v = static_cast<testkit::Fx>(draw_index(rng, 4 * testkit::kScale));
      for (std::size_t z = 0; z < s.size(); ++z)
        for (std::size_t x0 = 0; x0 < s.size(); ++x0) {
          if (testkit::fx_criterion_holds(m, z, x0, u, v)) continue;
          const testkit::Fx c = m[z][x0];
          REQUIRE(c > 0);
          REQUIRE(c < testkit::kInf);
          const testkit::Fx proj = (u + v >= c) ? std::min(u, c) : u;
          bool inside = false;
          for (const auto& g : criterion_gaps(s, z, x0))
            if (testkit::to_fx(g.lo) < proj && proj < testkit::to_fx(g.hi)) inside = true;
          CHECK(inside);
        }
    }
  }
}

TEST_CASE("spaces passing the decider pass the replay chain") {
  std::mt19937_64 rng(kDefaultSeed + 33);
  for (int i = 0; i < 20; ++i) {
    ApproachSpace s = random_space(1 + draw_index(rng, 4), testkit::costs({"0", "inf"}), rng);
    REQUIRE(check_exponentiable_exact(s).exponentiable);
    const Cost u = testkit::pick(rng, testkit::criterion_pool());
    const Cost v = testkit::pick(rng, testkit::criterion_pool());
    CHECK(replay_theorem(s, draw_index(rng, s.size()), draw_index(rng, s.size()), u, v).chain_holds());
  }
}

TEST_CASE("method names") {
  CHECK(to_string(Method::exact) == "exact");
  CHECK(to_string(Method::grid) == "grid");
  CHECK(to_string(Method::classify) == "classify");
}
