// SPDX-License-Identifier: Apache-2.0
#include "finapp/ultra.hpp"

#include <algorithm>
#include <stdexcept>

namespace finapp {

namespace {

void require_literal(std::size_t n, const char* what) {
  if (n > kLiteralCap) {
    throw std::invalid_argument(std::string(what) + ": carrier of size " +
                                std::to_string(n) +
                                " exceeds the literal-mode cap of " +
                                std::to_string(kLiteralCap));
  }
}

}  // namespace

FinUltrafilter::FinUltrafilter(PointSet carrier, std::size_t point)
    : carrier_(std::move(carrier)), point_(point) {
  if (point_ >= carrier_.size()) {
    throw std::out_of_range("ultrafilter point outside its carrier");
  }
}

std::vector<Subset> FinUltrafilter::members() const {
  require_literal(carrier_.size(), "members");
  std::vector<Subset> out;
  const Subset all = full_set(carrier_.size());
  for (Subset a = 0; a <= all; ++a) {
    if (contains(a)) out.push_back(a);
  }
  return out;
}

FinUltrafilter FinUltrafilter::from_members(PointSet carrier,
                                            const std::vector<Subset>& family) {
  const std::size_t n = carrier.size();
  require_literal(n, "from_members");
  std::size_t found = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(family.begin(), family.end(), singleton(i)) != family.end()) {
      if (found != n) throw std::logic_error("family contains two singletons");
      found = i;
    }
  }
  if (found == n) throw std::logic_error("family contains no singleton");
  FinUltrafilter u(std::move(carrier), found);
  std::vector<Subset> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted != u.members()) {
    throw std::logic_error("family is not the principal ultrafilter at " +
                           u.point_label());
  }
  return u;
}

std::string FinUltrafilter::describe() const {
  return "principal(" + point_label() + ")";
}

PointSet ultrafilter_points(const PointSet& x) {
  std::vector<std::string> labels;
  labels.reserve(x.size());
  for (const auto& l : x.labels()) labels.push_back("principal(" + l + ")");
  return PointSet(std::move(labels));
}

std::vector<FinUltrafilter> enumerate_ultrafilters(const PointSet& x) {
  std::vector<FinUltrafilter> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.emplace_back(x, i);
  return out;
}

FinUltrafilter unit(const PointSet& x, std::size_t i) { return {x, i}; }

Subset preimage(const FinMap& f, Subset b) {
  Subset out = 0;
  for (std::size_t i = 0; i < f.source.size(); ++i) {
    if (member(b, f.image[i])) out |= singleton(i);
  }
  return out;
}

FinUltrafilter push_forward(const FinMap& f, const FinUltrafilter& u, Mode mode) {
  if (!(u.carrier() == f.source)) {
    throw ShapeError("push_forward: ultrafilter lives on " +
                     u.carrier().describe() + ", map starts at " +
                     f.source.describe());
  }
  if (mode == Mode::principal) return {f.target, f.image.at(u.point())};

  require_literal(f.target.size(), "push_forward");
  std::vector<Subset> family;
  const Subset all = full_set(f.target.size());
  for (Subset b = 0; b <= all; ++b) {
    if (u.contains(preimage(f, b))) family.push_back(b);
  }
  return FinUltrafilter::from_members(f.target, family);
}

Subset sharp(const PointSet& x, Subset a) {
  Subset out = 0;
  for (const auto& ua : enumerate_ultrafilters(x)) {
    if (ua.contains(a)) out |= singleton(ua.point());
  }
  return out;
}

FinUltrafilter mult(const PointSet& x, const IterUltrafilter& big, Mode mode) {
  if (!(big.carrier() == ultrafilter_points(x))) {
    throw ShapeError("mult: argument is not an ultrafilter on U" + x.describe());
  }
  if (mode == Mode::principal) return {x, big.point()};

  require_literal(x.size(), "mult");
  std::vector<Subset> family;
  const Subset all = full_set(x.size());
  for (Subset a = 0; a <= all; ++a) {
    if (big.contains(sharp(x, a))) family.push_back(a);
  }
  return FinUltrafilter::from_members(x, family);
}

FinMap unit_map(const PointSet& x) {
  FinMap f{x, ultrafilter_points(x), {}};
  for (std::size_t i = 0; i < x.size(); ++i) f.image.push_back(i);
  return f;
}

FinMap mult_map(const PointSet& x) {
  auto ux = ultrafilter_points(x);
  FinMap f{ultrafilter_points(ux), ux, {}};
  for (std::size_t i = 0; i < x.size(); ++i) f.image.push_back(i);
  return f;
}

FinMap lift(const FinMap& f) {
  return FinMap{ultrafilter_points(f.source), ultrafilter_points(f.target), f.image};
}

NumRel extend(const NumRel& r, Mode mode) {
  NumRel out(ultrafilter_points(r.source()), ultrafilter_points(r.target()));
  if (mode == Mode::principal) {
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) out.at(i, j) = r.at(i, j);
    return out;
  }

  require_literal(r.rows(), "extend");
  require_literal(r.cols(), "extend");
  const Subset all_x = full_set(r.rows());
  const Subset all_y = full_set(r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      const FinUltrafilter ux(r.source(), i);
      const FinUltrafilter uy(r.target(), j);
      Cost sup;
      for (Subset a = 1; a <= all_x; ++a) {
        if (!ux.contains(a)) continue;
        for (Subset b = 1; b <= all_y; ++b) {
          if (!uy.contains(b)) continue;
          const Cost* inf = nullptr;
          for (std::size_t x = 0; x < r.rows(); ++x) {
            if (!member(a, x)) continue;
            for (std::size_t y = 0; y < r.cols(); ++y) {
              if (member(b, y) && (inf == nullptr || r.at(x, y) < *inf)) {
                inf = &r.at(x, y);
              }
            }
          }
          if (sup < *inf) sup = *inf;
        }
      }
      out.at(i, j) = sup;
    }
  }
  return out;
}

Cost xi(std::span<const Cost> carrier, std::size_t at, Mode mode) {
  if (at >= carrier.size()) throw std::out_of_range("xi: point outside carrier");
  if (mode == Mode::principal) return carrier[at];

  require_literal(carrier.size(), "xi");
  Cost sup;
  const Subset all = full_set(carrier.size());
  for (Subset a = 1; a <= all; ++a) {
    if (!member(a, at)) continue;
    std::vector<Cost> chosen;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (member(a, i)) chosen.push_back(carrier[i]);
    }
    sup = join(sup, inf_of(chosen));
  }
  return sup;
}

Cost extU_pullback(const NumRel& r, const FinUltrafilter& x, const FinUltrafilter& y) {
  if (!(x.carrier() == r.source()) || !(y.carrier() == r.target())) {
    throw ShapeError("extU_pullback: ultrafilters do not live on the relation's sets");
  }
  const PointSet xy = product(r.source(), r.target());
  if (xy.size() > 64) throw std::invalid_argument("extU_pullback: product too large");

  std::vector<Cost> values;
  for (const auto& c : r.entries()) {
    if (std::find(values.begin(), values.end(), c) == values.end()) values.push_back(c);
  }
  std::vector<std::string> value_labels;
  for (const auto& c : values) value_labels.push_back(to_string(c));
  const PointSet value_set(std::move(value_labels));

  // r read as a map X×Y → (its finite set of values in [0,inf])
  FinMap as_map{xy, value_set, {}};
  for (const auto& c : r.entries()) {
    as_map.image.push_back(static_cast<std::size_t>(
        std::find(values.begin(), values.end(), c) - values.begin()));
  }
  const FinMap p1 = FinMap::projection1(r.source(), r.target());
  const FinMap p2 = FinMap::projection2(r.source(), r.target());

  Cost best = Cost::infinity();
  for (const auto& w : enumerate_ultrafilters(xy)) {
    if (!(push_forward(p1, w, Mode::literal) == x)) continue;
    if (!(push_forward(p2, w, Mode::literal) == y)) continue;
    const auto image = push_forward(as_map, w, Mode::literal);
    best = meet(best, xi(values, image.point(), Mode::literal));
  }
  return best;
}

}  // namespace finapp
