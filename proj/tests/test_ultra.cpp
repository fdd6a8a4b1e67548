// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "finapp/ultra.hpp"
#include "support/testkit.hpp"

using namespace finapp;
using testkit::letters;
using testkit::random_rel;

namespace {

const Cost kInfC = Cost::infinity();

/// Filter axioms checked directly on an explicit family of subsets of an
/// n-point set: upward closed, closed under intersection, proper, and
/// containing A or its complement for every A.
bool is_ultrafilter_family(std::size_t n, const std::vector<bool>& in) {
  const Subset all = full_set(n);
  if (in[0]) return false;
  for (Subset a = 0; a <= all; ++a) {
    if (in[a] == in[all & ~a]) return false;
    if (!in[a]) continue;
    for (Subset b = 0; b <= all; ++b) {
      if ((a & b) == a && !in[b]) return false;
      if (in[b] && !in[a & b]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("enumeration and membership") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const PointSet x = letters(n);
    const auto all = enumerate_ultrafilters(x);
    CHECK(all.size() == n);
    for (const auto& u : all) {
      for (Subset a = 0; a <= full_set(n); ++a) {
        CHECK(u.contains(a) == member(a, u.point()));
        CHECK(u.contains(a) != u.contains(full_set(n) & ~a));
      }
    }
  }
  CHECK(unit(PointSet{"p", "q"}, 1).describe() == "principal(q)");
  CHECK(ultrafilter_points(PointSet{"p"}).label(0) == "principal(p)");
}

TEST_CASE("explicit families are recognised exactly when they are ultrafilters") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const PointSet x = letters(n);
    const std::size_t subsets = std::size_t{1} << n;
    std::size_t recognised = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << subsets); ++code) {
      std::vector<bool> in(subsets);
      std::vector<Subset> family;
      for (Subset a = 0; a < subsets; ++a) {
        in[a] = ((code >> a) & 1U) != 0;
        if (in[a]) family.push_back(a);
      }
      const bool expected = is_ultrafilter_family(n, in);
      bool accepted = true;
      try {
        FinUltrafilter u = FinUltrafilter::from_members(x, family);
        CHECK(u.members() == family);
        ++recognised;
      } catch (const std::logic_error&) {
        accepted = false;
      }
      CHECK(accepted == expected);
    }
    CHECK(recognised == n);
  }
}

TEST_CASE("push forward") {
  const PointSet x = letters(3);
  const PointSet y = letters(3, "y");
  const FinUltrafilter u = unit(x, 1);
  CHECK(push_forward(FinMap::identity(x), u) == u);
  CHECK(push_forward(FinMap::constant(x, y, 2), u) == unit(y, 2));

  SUBCASE("set comprehension over every map of a 3-point set") {
    for (std::size_t code = 0; code < 27; ++code) {
      FinMap f{x, y, {code % 3, (code / 3) % 3, code / 9}};
      for (const auto& w : enumerate_ultrafilters(x)) {
        const FinUltrafilter image = push_forward(f, w);
        CHECK(push_forward(f, w, Mode::literal) == image);
        for (Subset b = 0; b < 8; ++b) {
          Subset pre = 0;
          for (std::size_t i = 0; i < 3; ++i)
            if (member(b, f.image[i])) pre |= singleton(i);
          CHECK(image.contains(b) == w.contains(pre));
        }
      }
    }
  }
  CHECK_THROWS_AS(push_forward(FinMap::identity(y), u), ShapeError);
}

TEST_CASE("sharp and multiplication") {
  const PointSet x{"p", "q"};
  const PointSet ux = ultrafilter_points(x);
  CHECK(sharp(x, 0b01) == 0b01);
  CHECK(sharp(x, 0b11) == 0b11);

  for (const auto& big : enumerate_ultrafilters(ux)) {
    const FinUltrafilter m = mult(x, big, Mode::literal);
    CHECK(m == mult(x, big));
    for (Subset a = 0; a < 4; ++a) {
      // A♯ as the set of ultrafilters containing A, built from memberships
      Subset a_sharp = 0;
      for (const auto& small : enumerate_ultrafilters(x))
        if (small.contains(a)) a_sharp |= singleton(small.point());
      CHECK(m.contains(a) == big.contains(a_sharp));
    }
  }
}

TEST_CASE("monad laws") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const PointSet x = letters(n);
    const PointSet ux = ultrafilter_points(x);
    const PointSet uux = ultrafilter_points(ux);
    for (const auto& a : enumerate_ultrafilters(x)) {
      const Mode mode = Mode::literal;
      CHECK(mult(x, unit(ux, a.point()), mode) == a);
      CHECK(mult(x, push_forward(unit_map(x), a, mode), mode) == a);
    }
    for (const auto& big : enumerate_ultrafilters(uux)) {
      const auto via_um = mult(x, mult(ux, big));
      const auto via_mu = mult(x, push_forward(mult_map(x), big));
      CHECK(via_um == via_mu);
    }
  }
}

TEST_CASE("naturality of unit and multiplication for maps") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const PointSet x = letters(3);
    const PointSet y = letters(4, "y");
    FinMap f = testkit::random_map(rng, x, y);
    CHECK(compose(unit_map(x), lift(f)).image == compose(f, unit_map(y)).image);
    CHECK(compose(mult_map(x), lift(f)).image == compose(lift(lift(f)), mult_map(y)).image);
  }
}

TEST_CASE("extension of relations") {
  std::mt19937_64 rng(kDefaultSeed + 3);
  for (int i = 0; i < 30; ++i) {
    const PointSet x = letters(3);
    const PointSet y = letters(3, "y");
    NumRel r = random_rel(rng, x, y);
    const NumRel lit = extend(r, Mode::literal);
    const NumRel fast = extend(r);
    CHECK(lit == fast);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) CHECK(fast.at(a, b) == r.at(a, b));
    CHECK(extend(converse(r), Mode::literal) == converse(lit));
    const Cost u = testkit::random_cost(rng);
    CHECK(extend(scale_join(u, r), Mode::literal) == scale_join(u, lit));
  }
  CHECK_THROWS_AS(extend(NumRel(letters(13), letters(1)), Mode::literal), std::invalid_argument);
}

TEST_CASE("lax extension laws") {
  std::mt19937_64 rng(kDefaultSeed + 4);
  for (int i = 0; i < 20; ++i) {
    const PointSet x = letters(2 + finapp::draw_index(rng, 2));
    const PointSet y = letters(2 + finapp::draw_index(rng, 2), "y");
    const PointSet z = letters(2, "z");
    NumRel r = random_rel(rng, x, y);
    NumRel s = random_rel(rng, y, z);
    const NumRel ur = extend(r, Mode::literal);

    const NumRel ex = from_map(unit_map(x));
    const NumRel ey = from_map(unit_map(y));
    CHECK(leq(compose(r, ey), compose(ex, ur)));

    const NumRel mx = from_map(mult_map(x));
    const NumRel my = from_map(mult_map(y));
    CHECK(compose(mx, ur) == compose(extend(ur, Mode::literal), my));

    CHECK(extend(compose(r, s)) == compose(ur, extend(s)));
    CHECK(extend(identity(x)) == identity(ultrafilter_points(x)));
  }
}

TEST_CASE("xi") {
  const std::vector<Cost> carrier{1, 2, 5};
  CHECK(xi(carrier, 1, Mode::literal) == Cost{2});
  CHECK(xi(carrier, 2) == Cost{5});

  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    std::vector<Cost> values;
    const std::size_t n = 1 + finapp::draw_index(rng, 10);
    for (std::size_t k = 0; k < n; ++k) values.push_back(testkit::random_cost(rng));
    for (std::size_t at = 0; at < n; ++at) {
      CHECK(xi(values, at, Mode::literal) == values[at]);
    }
  }

  SUBCASE("after t_u") {
    const std::vector<Cost> vals = testkit::costs({"0", "1/2", "1", "3", "inf"});
    std::vector<std::string> labels;
    for (const auto& c : vals) labels.push_back(to_string(c));
    const PointSet carrier_set(labels);
    for (std::size_t ui = 0; ui < vals.size(); ++ui) {
      FinMap t{carrier_set, carrier_set, {}};
      for (const auto& c : vals)
        t.image.push_back(static_cast<std::size_t>(
            std::find(vals.begin(), vals.end(), join(vals[ui], c)) - vals.begin()));
      for (std::size_t vi = 0; vi < vals.size(); ++vi) {
        const auto image = push_forward(t, unit(carrier_set, vi), Mode::literal);
        CHECK(xi(vals, image.point(), Mode::literal) == join(vals[ui], vals[vi]));
      }
    }
  }
}

TEST_CASE("extension through ultrafilters on the product") {
  const PointSet x = letters(2);
  const PointSet y = letters(3, "y");
  const NumRel all_inf(x, y);
  CHECK(extU_pullback(all_inf, unit(x, 1), unit(y, 2)) == kInfC);

  std::mt19937_64 rng(kDefaultSeed + 5);
  for (int i = 0; i < 5; ++i) {
    NumRel r = random_rel(rng, x, y);
    const NumRel ur = extend(r, Mode::literal);
    for (const auto& a : enumerate_ultrafilters(x))
      for (const auto& b : enumerate_ultrafilters(y))
        CHECK(extU_pullback(r, a, b) == ur.at(a.point(), b.point()));
  }
}

TEST_CASE("weak pullbacks are preserved") {
  // every cospan A → C ← B with |A|, |B|, |C| <= 2, and a sample at size 3
  auto check_cospan = [](const FinMap& f, const FinMap& g) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < f.source.size(); ++a)
      for (std::size_t b = 0; b < g.source.size(); ++b)
        if (f(a) == g(b)) {
          labels.push_back(f.source.label(a) + "," + g.source.label(b));
          pairs.emplace_back(a, b);
        }
    const PointSet p(labels);
    FinMap p1{p, f.source, {}};
    FinMap p2{p, g.source, {}};
    for (const auto& [a, b] : pairs) {
      p1.image.push_back(a);
      p2.image.push_back(b);
    }
    for (const auto& ua : enumerate_ultrafilters(f.source)) {
      for (const auto& ub : enumerate_ultrafilters(g.source)) {
        if (!(push_forward(f, ua, Mode::literal) == push_forward(g, ub, Mode::literal))) continue;
        bool lifted = false;
        for (const auto& w : enumerate_ultrafilters(p)) {
          if (push_forward(p1, w, Mode::literal) == ua && push_forward(p2, w, Mode::literal) == ub)
            lifted = true;
        }
        CHECK(lifted);
      }
    }
  };
  for (std::size_t na = 1; na <= 3; ++na) {
    for (std::size_t nb = 1; nb <= 3; ++nb) {
      const PointSet a = letters(na, "a"), b = letters(nb, "b"), c = letters(3, "c");
      std::mt19937_64 rng(na * 10 + nb);
      for (int i = 0; i < 10; ++i) check_cospan(testkit::random_map(rng, a, c), testkit::random_map(rng, b, c));
    }
  }
}
