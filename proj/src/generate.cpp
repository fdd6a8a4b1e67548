// SPDX-License-Identifier: Apache-2.0
#include "finapp/generate.hpp"

#include <stdexcept>
#include <string>

namespace finapp {

PointSet numbered_points(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return PointSet(std::move(labels));
}

NumRel random_matrix(std::size_t n, std::span<const Cost> values, std::mt19937_64& rng,
                     bool zero_diagonal) {
  if (values.empty()) throw std::invalid_argument("random_matrix: no values to draw from");
  const PointSet pts = numbered_points(n);
  NumRel m(pts, pts);
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t x = 0; x < n; ++x) {
      m.at(z, x) = (zero_diagonal && z == x) ? Cost{} : values[draw_index(rng, values.size())];
    }
  }
  return m;
}

NumRel metric_closure(const NumRel& m) {
  NumRel cur = m;
  for (std::size_t i = 0; i < cur.rows(); ++i) cur.at(i, i) = Cost{};
  for (;;) {
    NumRel next = compose(cur, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

ApproachSpace random_space(std::size_t n, std::span<const Cost> values,
                           std::mt19937_64& rng) {
  NumRel m = random_matrix(n, values, rng, true);
  if (!check_axioms_matrix(m).ok()) m = metric_closure(m);
  return ApproachSpace::from_matrix(std::move(m));
}

}  // namespace finapp
