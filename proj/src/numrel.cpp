// SPDX-License-Identifier: Apache-2.0
#include "finapp/numrel.hpp"

#include <algorithm>
#include <unordered_set>

namespace finapp {

PointSet::PointSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw ShapeError("duplicate point label '" + l + "'");
    }
  }
}

std::size_t PointSet::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw ShapeError("unknown point '" + label + "' in " + describe());
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool PointSet::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::string PointSet::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ", ";
    out += labels_[i];
  }
  return out + "}";
}

PointSet product(const PointSet& x, const PointSet& y) {
  std::vector<std::string> labels;
  labels.reserve(x.size() * y.size());
  for (const auto& a : x.labels()) {
    for (const auto& b : y.labels()) labels.push_back("(" + a + "," + b + ")");
  }
  return PointSet(std::move(labels));
}

FinMap FinMap::identity(const PointSet& x) {
  FinMap f{x, x, {}};
  for (std::size_t i = 0; i < x.size(); ++i) f.image.push_back(i);
  return f;
}

FinMap FinMap::constant(const PointSet& x, const PointSet& y, std::size_t at) {
  if (at >= y.size()) throw ShapeError("constant map target out of range");
  return FinMap{x, y, std::vector<std::size_t>(x.size(), at)};
}

FinMap FinMap::from_labels(const PointSet& source, const PointSet& target,
                           const std::map<std::string, std::string>& table) {
  FinMap f{source, target, {}};
  for (const auto& l : source.labels()) {
    auto it = table.find(l);
    if (it == table.end()) {
      throw ShapeError("map is not total: no image for '" + l + "'");
    }
    f.image.push_back(target.index_of(it->second));
  }
  for (const auto& [k, v] : table) {
    if (!source.contains(k)) {
      throw ShapeError("map names unknown source point '" + k + "'");
    }
  }
  return f;
}

FinMap FinMap::projection1(const PointSet& x, const PointSet& y) {
  FinMap f{product(x, y), x, {}};
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) f.image.push_back(i);
  return f;
}

FinMap FinMap::projection2(const PointSet& x, const PointSet& y) {
  FinMap f{product(x, y), y, {}};
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) f.image.push_back(j);
  return f;
}

FinMap compose(const FinMap& f, const FinMap& g) {
  if (!(f.target == g.source)) {
    throw ShapeError("cannot compose maps: " + f.target.describe() +
                     " vs " + g.source.describe());
  }
  FinMap h{f.source, g.target, {}};
  for (auto i : f.image) h.image.push_back(g.image.at(i));
  return h;
}

NumRel::NumRel(PointSet source, PointSet target, Cost fill)
    : source_(std::move(source)), target_(std::move(target)) {
  entries_.assign(source_.size() * target_.size(), fill);
}

NumRel::NumRel(PointSet source, PointSet target, std::vector<Cost> entries)
    : source_(std::move(source)),
      target_(std::move(target)),
      entries_(std::move(entries)) {
  if (entries_.size() != source_.size() * target_.size()) {
    throw ShapeError("relation has " + std::to_string(entries_.size()) +
                     " entries, expected " +
                     std::to_string(source_.size() * target_.size()));
  }
}

NumRel compose(const NumRel& r, const NumRel& s) {
  if (!(r.target() == s.source())) {
    throw ShapeError("cannot compose relations: middle sets differ, " +
                     r.target().describe() + " vs " + s.source().describe());
  }
  NumRel out(r.source(), s.target());
  for (std::size_t x = 0; x < r.rows(); ++x) {
    for (std::size_t y = 0; y < r.cols(); ++y) {
      const Cost& rxy = r.at(x, y);
      if (rxy.is_infinite()) continue;
      for (std::size_t z = 0; z < s.cols(); ++z) {
        const Cost& syz = s.at(y, z);
        if (syz.is_infinite()) continue;
        Cost sum = rxy + syz;
        if (sum < out.at(x, z)) out.at(x, z) = std::move(sum);
      }
    }
  }
  return out;
}

NumRel converse(const NumRel& r) {
  NumRel out(r.target(), r.source());
  for (std::size_t x = 0; x < r.rows(); ++x)
    for (std::size_t y = 0; y < r.cols(); ++y) out.at(y, x) = r.at(x, y);
  return out;
}

NumRel scale_join(const Cost& u, const NumRel& r) {
  NumRel out = r;
  for (std::size_t x = 0; x < r.rows(); ++x)
    for (std::size_t y = 0; y < r.cols(); ++y) out.at(x, y) = join(u, r.at(x, y));
  return out;
}

NumRel identity(const PointSet& x) { return from_map(FinMap::identity(x)); }

NumRel from_map(const FinMap& f) {
  NumRel out(f.source, f.target);
  for (std::size_t i = 0; i < f.source.size(); ++i) out.at(i, f.image.at(i)) = Cost{};
  return out;
}

bool leq(const NumRel& r, const NumRel& r2) {
  if (!(r.source() == r2.source()) || !(r.target() == r2.target())) {
    throw ShapeError("cannot compare relations over different point sets");
  }
  for (std::size_t i = 0; i < r.entries().size(); ++i) {
    if (r.entries()[i] < r2.entries()[i]) return false;
  }
  return true;
}

}  // namespace finapp
