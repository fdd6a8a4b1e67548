// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace finapp {

/// Error raised when a textual cost cannot be parsed. `position()` is the
/// byte offset of the first offending character.
class CostParseError : public std::invalid_argument {
 public:
  CostParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A value of the quantale [0,inf]: an exact nonnegative rational, or the
/// top element infinity.
///
/// 0 plays the role of "true" and infinity of "false". The order is the
/// natural numeric order with infinity on top. Finite values are stored as
/// canonical GMP rationals; infinity is a tag, never a large numeral.
class Cost {
 public:
  /// Zero.
  Cost() = default;
  Cost(long n);  // NOLINT(google-explicit-constructor)
  static Cost rational(const mpq_class& q);
  static Cost ratio(long num, long den);
  static Cost infinity();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  bool is_zero() const noexcept { return !infinite_ && sgn(value_) == 0; }

  /// The finite value. Throws std::logic_error on infinity.
  const mpq_class& value() const;

  friend bool operator==(const Cost& a, const Cost& b);
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);

 private:
  bool infinite_ = false;
  mpq_class value_{0};
};

Cost add(const Cost& u, const Cost& v);
inline Cost operator+(const Cost& u, const Cost& v) { return add(u, v); }

/// Truncated subtraction v ⊖ u: the least w with u + w >= v.
/// inf ⊖ u = inf for finite u, v ⊖ inf = 0, and inf ⊖ inf = 0.
Cost ominus(const Cost& v, const Cost& u);

Cost join(const Cost& u, const Cost& v);
Cost meet(const Cost& u, const Cost& v);

/// Infimum of a finite list; inf for the empty list.
Cost inf_of(std::span<const Cost> values);
/// Supremum of a finite list; 0 for the empty list.
Cost sup_of(std::span<const Cost> values);

/// Exact parse of "inf", integers, "p/q" and decimals such as "1.25".
Cost parse_cost(std::string_view text);
/// Canonical text: "inf", "3", or "p/q" in lowest terms.
std::string to_string(const Cost& c);

std::ostream& operator<<(std::ostream& os, const Cost& c);

}  // namespace finapp
