// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <sstream>

#include "finapp/cost.hpp"
#include "support/testkit.hpp"

using namespace finapp;

namespace {
const Cost kInfC = Cost::infinity();
Cost q(const char* t) { return parse_cost(t); }
}  // namespace

TEST_CASE("addition") {
  CHECK(add(2, 3) == Cost{5});
  CHECK(add(kInfC, 0) == kInfC);
  CHECK(add(0, q("7/3")) == q("7/3"));
  CHECK(q("1/3") + q("1/6") == q("1/2"));
}

TEST_CASE("truncated subtraction") {
  CHECK(ominus(5, 3) == Cost{2});
  CHECK(ominus(3, 5) == Cost{0});
  CHECK(ominus(kInfC, 7) == kInfC);
  CHECK(ominus(7, kInfC) == Cost{0});
  CHECK(ominus(kInfC, kInfC) == Cost{0});
}

TEST_CASE("lattice operations and empty bounds") {
  CHECK(join(1, 4) == Cost{4});
  CHECK(meet(1, 4) == Cost{1});
  CHECK(join(kInfC, 0) == kInfC);
  CHECK(inf_of({}) == kInfC);
  CHECK(sup_of({}) == Cost{0});
  std::vector<Cost> xs{3, q("1/2"), kInfC};
  CHECK(inf_of(xs) == q("1/2"));
  CHECK(sup_of(xs) == kInfC);
}

TEST_CASE("order puts infinity on top") {
  CHECK(Cost{0} < Cost{1});
  CHECK(q("99999999999999999999") < kInfC);
  CHECK(kInfC == kInfC);
  CHECK_FALSE(kInfC < kInfC);
}

TEST_CASE("parsing is exact") {
  CHECK(q("inf") == kInfC);
  CHECK(q("infinity") == kInfC);
  CHECK(q("∞") == kInfC);
  CHECK(q("1.25") == Cost::ratio(5, 4));
  CHECK(q("2/4") == Cost::ratio(1, 2));
  CHECK(q("0.1") + q("0.2") == q("3/10"));
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(kInfC) == "inf");

  SUBCASE("rejects negatives and garbage with a position") {
    CHECK_THROWS_AS(q("-1"), CostParseError);
    CHECK_THROWS_AS(q("1/0"), CostParseError);
    CHECK_THROWS_AS(q(""), CostParseError);
    try {
      q("12x");
      FAIL("expected a parse error");
    } catch (const CostParseError& e) {
      CHECK(e.position() == 2);
    }
  }
}

TEST_CASE("value() refuses infinity") { CHECK_THROWS_AS(kInfC.value(), std::logic_error); }

TEST_CASE("stream output") {
  std::ostringstream os;
  os << q("3/4") << ' ' << kInfC;
  CHECK(os.str() == "3/4 inf");
}

TEST_CASE("adjunction, monotonicity and distributivity on random triples") {
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 2000; ++i) {
    const Cost u = testkit::random_cost(rng);
    const Cost v = testkit::random_cost(rng);
    const Cost w = testkit::random_cost(rng);
    CHECK((u + v >= w) == (v >= ominus(w, u)));
    CHECK(u + v == v + u);
    CHECK((u + v) + w == u + (v + w));
    if (u <= v) {
      CHECK(u + w <= v + w);
      CHECK(ominus(w, u) >= ominus(w, v));
      CHECK(ominus(u, w) <= ominus(v, w));
    }
    CHECK(join(u, meet(u, v)) == u);
    CHECK(meet(u, join(u, v)) == u);
    CHECK(join(u, join(v, w)) == join(join(u, v), w));
    std::vector<Cost> list{v, w};
    std::vector<Cost> shifted{u + v, u + w};
    CHECK(u + inf_of(list) == inf_of(shifted));
    CHECK(ominus(w, u) == testkit::from_fx(testkit::fx_ominus(testkit::to_fx(w), testkit::to_fx(u))));
  }
}
