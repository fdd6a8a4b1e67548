// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "finapp/cost.hpp"

namespace finapp {

/// Raised when two relations or maps are combined over mismatching point
/// sets, or a map names a label outside its target.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite, ordered set of distinct labels. Elements are addressed by
/// position; the labels exist for reports and file formats.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<std::string> labels);
  PointSet(std::initializer_list<std::string> labels)
      : PointSet(std::vector<std::string>(labels)) {}

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Position of `label`; throws ShapeError if absent.
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const;

  /// "{a, b, c}"
  std::string describe() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Cartesian product with labels "(x,y)", row-major (first factor outer).
PointSet product(const PointSet& x, const PointSet& y);

/// A total function between point sets, stored as target positions.
struct FinMap {
  PointSet source;
  PointSet target;
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t i) const { return image.at(i); }

  static FinMap identity(const PointSet& x);
  static FinMap constant(const PointSet& x, const PointSet& y, std::size_t at);
  /// Builds a map from a label table; every source label must be present
  /// and every value must name a target label.
  static FinMap from_labels(const PointSet& source, const PointSet& target,
                            const std::map<std::string, std::string>& table);
  static FinMap projection1(const PointSet& x, const PointSet& y);
  static FinMap projection2(const PointSet& x, const PointSet& y);
};

/// g ∘ f
FinMap compose(const FinMap& f, const FinMap& g);

/// A numerical relation r: X ⇸ Y, i.e. a dense |X| × |Y| matrix of costs.
class NumRel {
 public:
  NumRel() = default;
  NumRel(PointSet source, PointSet target, Cost fill = Cost::infinity());
  NumRel(PointSet source, PointSet target, std::vector<Cost> entries);

  const PointSet& source() const noexcept { return source_; }
  const PointSet& target() const noexcept { return target_; }
  std::size_t rows() const noexcept { return source_.size(); }
  std::size_t cols() const noexcept { return target_.size(); }

  const Cost& at(std::size_t x, std::size_t y) const {
    return entries_[x * cols() + y];
  }
  Cost& at(std::size_t x, std::size_t y) { return entries_[x * cols() + y]; }
  const std::vector<Cost>& entries() const noexcept { return entries_; }

  friend bool operator==(const NumRel&, const NumRel&) = default;

 private:
  PointSet source_;
  PointSet target_;
  std::vector<Cost> entries_;
};

/// s · r, the min-plus product: (s·r)(x,z) = inf_y r(x,y) + s(y,z).
/// Throws ShapeError unless r.target() == s.source().
NumRel compose(const NumRel& r, const NumRel& s);

NumRel converse(const NumRel& r);

/// u ⊙ r, the entrywise join with u.
NumRel scale_join(const Cost& u, const NumRel& r);

/// Identity relation: 0 on the diagonal, inf elsewhere.
NumRel identity(const PointSet& x);

/// Graph of a map as a 0/inf relation.
NumRel from_map(const FinMap& f);

/// The order on relations. Throughout this library `leq(r, r2)` means
/// r(x,y) >= r2(x,y) numerically for every entry, which is "r is at most as
/// true as r2" in the truth order where 0 is true. This is the inequality
/// written r >= r2 between relations.
/// Throws ShapeError on mismatching point sets.
bool leq(const NumRel& r, const NumRel& r2);

}  // namespace finapp
