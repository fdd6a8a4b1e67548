// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "finapp/approach.hpp"

namespace finapp {

/// Default seed for every randomized entry point.
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Uniform index in [0, n) from a raw 64-bit draw, so that streams are
/// identical across standard libraries.
inline std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

/// Point labels "p0", "p1", ...
PointSet numbered_points(std::size_t n);

/// A square matrix with entries drawn from `values`; the diagonal is forced
/// to 0 when `zero_diagonal` is set.
NumRel random_matrix(std::size_t n, std::span<const Cost> values,
                     std::mt19937_64& rng, bool zero_diagonal = true);

/// Least fixpoint of m ↦ m · m (min-plus squaring) above a zero-diagonal
/// matrix: the shortest-path closure, which satisfies the triangle law.
NumRel metric_closure(const NumRel& m);

/// A random valid space: a zero-diagonal draw is kept if it already
/// satisfies the triangle law and metrically closed otherwise.
ApproachSpace random_space(std::size_t n, std::span<const Cost> values,
                           std::mt19937_64& rng);

}  // namespace finapp
