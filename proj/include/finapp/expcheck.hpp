// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finapp/approach.hpp"

namespace finapp {

/// For a pair (z, x0), the criterion
///   (u+v) ∨ δm(z,x0) >= min_y (u ∨ δm(y,x0)) + (v ∨ δm(z,y))
/// with lhs and rhs evaluated at a specific (u, v).
struct CriterionSides {
  Cost lhs;
  Cost rhs;
  /// The y attaining the minimum (the first one on ties).
  std::size_t argmin_y = 0;

  bool holds() const { return lhs >= rhs; }
};

CriterionSides criterion_sides(const ApproachSpace& s, std::size_t z, std::size_t x0,
                               const Cost& u, const Cost& v);

/// A violation of the criterion: rhs > lhs exactly.
struct CriterionWitness {
  std::size_t z = 0;
  std::size_t x0 = 0;
  Cost u;
  Cost v;
  Cost lhs;
  Cost rhs;
  std::size_t argmin_y = 0;

  friend bool operator==(const CriterionWitness&, const CriterionWitness&) = default;
};

enum class Method { exact, grid, classify };

std::string to_string(Method m);

struct ExpReport {
  Method method = Method::exact;
  bool exponentiable = true;
  /// Present for exact and grid failures.
  std::optional<CriterionWitness> witness;
  /// For the classifier: the first entry strictly between 0 and inf.
  std::optional<std::pair<std::size_t, std::size_t>> offending_entry;
  std::size_t pairs_examined = 0;
  std::size_t candidates_examined = 0;
};

/// An open interval (lo, hi) of u on the segment u + v = δm(z,x0) along
/// which the criterion fails.
struct Gap {
  Cost lo;
  Cost hi;
};

/// All failing stretches for the pair (z, x0), in increasing order.
///
/// For c = δm(z,x0) in {0, inf} the pair always holds. Otherwise the
/// difference rhs − lhs is non-increasing in u and v above the line
/// u + v = c and non-decreasing below it, so the pair holds everywhere iff
/// it holds on the segment. On the segment the y-term equals c exactly when
/// δm(y,x0) <= u <= c − δm(z,y), and exceeds c otherwise; the pair holds iff
/// these closed intervals cover [0, c].
std::vector<Gap> criterion_gaps(const ApproachSpace& s, std::size_t z, std::size_t x0);

/// Decides the criterion over all u, v in [0,inf]. The witness is taken at
/// the first failing pair in (z, x0) order, at the midpoint of its first gap.
ExpReport check_exponentiable_exact(const ApproachSpace& s);

/// Evaluates the criterion only at grid points (sorted, deduplicated);
/// the first violation in (z, x0, u, v) order is reported. Sound for
/// refutation only.
ExpReport check_exponentiable_grid(const ApproachSpace& s, std::span<const Cost> grid);

/// 0, inf, every entry, every positive difference and every half-sum of
/// finite entries, and the largest finite entry plus one.
std::vector<Cost> dense_grid(const ApproachSpace& s);

/// Passes iff every entry of δm is 0 or inf. On finite carriers this agrees
/// with the criterion; it is a property of the finite test bed.
ExpReport classify_finite(const ApproachSpace& s);

}  // namespace finapp
