// SPDX-License-Identifier: Apache-2.0
#include "finapp/expcheck.hpp"

#include <algorithm>
#include <stdexcept>

namespace finapp {

std::string to_string(Method m) {
  switch (m) {
    case Method::exact:
      return "exact";
    case Method::grid:
      return "grid";
    case Method::classify:
      return "classify";
  }
  return "unknown";
}

CriterionSides criterion_sides(const ApproachSpace& s, std::size_t z, std::size_t x0,
                               const Cost& u, const Cost& v) {
  CriterionSides out;
  out.lhs = join(u + v, s.conv(z, x0));
  out.rhs = Cost::infinity();
  for (std::size_t y = 0; y < s.size(); ++y) {
    // u ∨ inf short-circuits before any arithmetic
    if (s.conv(y, x0).is_infinite() || s.conv(z, y).is_infinite()) continue;
    Cost term = join(u, s.conv(y, x0)) + join(v, s.conv(z, y));
    if (term < out.rhs) {
      out.rhs = std::move(term);
      out.argmin_y = y;
    }
  }
  return out;
}

std::vector<Gap> criterion_gaps(const ApproachSpace& s, std::size_t z, std::size_t x0) {
  const Cost& c = s.conv(z, x0);
  if (c.is_infinite() || c.is_zero()) return {};

  std::vector<std::pair<Cost, Cost>> covered;
  for (std::size_t y = 0; y < s.size(); ++y) {
    const Cost& alpha = s.conv(y, x0);
    const Cost& beta = s.conv(z, y);
    if (alpha.is_infinite() || beta.is_infinite()) continue;
    if (c < alpha + beta) continue;
    covered.emplace_back(alpha, Cost::rational(c.value() - beta.value()));
  }
  std::sort(covered.begin(), covered.end());

  std::vector<Gap> gaps;
  Cost reach;
  bool started = false;
  for (const auto& [lo, hi] : covered) {
    if (!started) {
      if (!lo.is_zero()) gaps.push_back({Cost{}, lo});
      reach = hi;
      started = true;
      continue;
    }
    if (reach < lo) gaps.push_back({reach, lo});
    reach = join(reach, hi);
  }
  if (!started) {
    gaps.push_back({Cost{}, c});
  } else if (reach < c) {
    gaps.push_back({reach, c});
  }
  return gaps;
}

namespace {

CriterionWitness witness_at(const ApproachSpace& s, std::size_t z, std::size_t x0,
                            const Cost& u, const Cost& v) {
  CriterionSides sides = criterion_sides(s, z, x0, u, v);
  if (sides.holds()) {
    throw std::logic_error("criterion witness does not violate the criterion");
  }
  return {z, x0, u, v, sides.lhs, sides.rhs, sides.argmin_y};
}

}  // namespace

ExpReport check_exponentiable_exact(const ApproachSpace& s) {
  ExpReport rep;
  rep.method = Method::exact;
  for (std::size_t z = 0; z < s.size(); ++z) {
    for (std::size_t x0 = 0; x0 < s.size(); ++x0) {
      ++rep.pairs_examined;
      rep.candidates_examined += s.size();
      auto gaps = criterion_gaps(s, z, x0);
      if (gaps.empty()) continue;
      const Gap& g = gaps.front();
      Cost u = Cost::rational((g.lo.value() + g.hi.value()) / 2);
      Cost v = Cost::rational(s.conv(z, x0).value() - u.value());
      rep.exponentiable = false;
      rep.witness = witness_at(s, z, x0, u, v);
      return rep;
    }
  }
  return rep;
}

ExpReport check_exponentiable_grid(const ApproachSpace& s, std::span<const Cost> grid) {
  std::vector<Cost> points(grid.begin(), grid.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  ExpReport rep;
  rep.method = Method::grid;
  for (std::size_t z = 0; z < s.size(); ++z) {
    for (std::size_t x0 = 0; x0 < s.size(); ++x0) {
      ++rep.pairs_examined;
      for (const auto& u : points) {
        for (const auto& v : points) {
          ++rep.candidates_examined;
          CriterionSides sides = criterion_sides(s, z, x0, u, v);
          if (!sides.holds()) {
            rep.exponentiable = false;
            rep.witness = CriterionWitness{z, x0, u, v, sides.lhs, sides.rhs, sides.argmin_y};
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

std::vector<Cost> dense_grid(const ApproachSpace& s) {
  std::vector<Cost> finite;
  for (const auto& c : s.matrix().entries()) {
    if (c.is_finite()) finite.push_back(c);
  }
  std::sort(finite.begin(), finite.end());
  finite.erase(std::unique(finite.begin(), finite.end()), finite.end());

  std::vector<Cost> grid{Cost{}, Cost::infinity()};
  for (std::size_t i = 0; i < finite.size(); ++i) {
    grid.push_back(finite[i]);
    for (std::size_t j = i; j < finite.size(); ++j) {
      grid.push_back(ominus(finite[j], finite[i]));
      grid.push_back(Cost::rational((finite[i].value() + finite[j].value()) / 2));
    }
  }
  grid.push_back((finite.empty() ? Cost{} : finite.back()) + Cost{1});
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

ExpReport classify_finite(const ApproachSpace& s) {
  ExpReport rep;
  rep.method = Method::classify;
  for (std::size_t z = 0; z < s.size(); ++z) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      ++rep.candidates_examined;
      const Cost& c = s.conv(z, x);
      if (c.is_finite() && !c.is_zero()) {
        rep.exponentiable = false;
        rep.offending_entry = {z, x};
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace finapp
