// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "finapp/cost.hpp"
#include "finapp/numrel.hpp"

namespace finapp {

/// A subset of a finite carrier, as a bitmask over element positions.
using Subset = std::uint64_t;

/// Largest carrier on which the literal (subset-enumerating) definitions
/// are evaluated.
inline constexpr std::size_t kLiteralCap = 12;

/// How a definition over ultrafilters is evaluated. `principal` uses the
/// closed form valid because every ultrafilter on a finite set is principal;
/// `literal` enumerates member subsets and follows the sup/inf formulas.
enum class Mode { principal, literal };

inline Subset singleton(std::size_t i) { return Subset{1} << i; }
inline Subset full_set(std::size_t n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}
inline bool member(Subset a, std::size_t i) { return ((a >> i) & 1U) != 0; }

/// An ultrafilter on a finite carrier. All of them are principal, so only
/// the point is stored; `contains` answers A ∈ ẋ  ⟺  x ∈ A.
class FinUltrafilter {
 public:
  FinUltrafilter(PointSet carrier, std::size_t point);

  const PointSet& carrier() const noexcept { return carrier_; }
  std::size_t point() const noexcept { return point_; }
  const std::string& point_label() const { return carrier_.label(point_); }

  bool contains(Subset a) const { return member(a, point_); }

  /// Every member subset, in increasing bitmask order. Carrier <= kLiteralCap.
  std::vector<Subset> members() const;

  /// Recovers the ultrafilter from an explicit family of subsets. Throws
  /// std::logic_error if the family is not an ultrafilter on the carrier.
  static FinUltrafilter from_members(PointSet carrier,
                                     const std::vector<Subset>& family);

  /// "principal(x)"
  std::string describe() const;

  friend bool operator==(const FinUltrafilter&, const FinUltrafilter&) = default;

 private:
  PointSet carrier_;
  std::size_t point_;
};

/// An ultrafilter on UX; same representation one level up.
using IterUltrafilter = FinUltrafilter;

/// The carrier UX, labelled "principal(x)" in the order of X.
PointSet ultrafilter_points(const PointSet& x);

/// All ultrafilters on X, one per point, in carrier order.
std::vector<FinUltrafilter> enumerate_ultrafilters(const PointSet& x);

/// ẋ, the unit e_X(x).
FinUltrafilter unit(const PointSet& x, std::size_t i);

/// f⁻¹(B) as a subset of f.source.
Subset preimage(const FinMap& f, Subset b);

/// Uf(𝔵) = {B ⊆ Y | f⁻¹(B) ∈ 𝔵}. Literal mode builds the family and
/// recovers its point; it requires |Y| <= kLiteralCap.
FinUltrafilter push_forward(const FinMap& f, const FinUltrafilter& u,
                            Mode mode = Mode::principal);

/// A♯ = {𝔞 ∈ UX | A ∈ 𝔞}, as a subset of UX.
Subset sharp(const PointSet& x, Subset a);

/// m_X(𝔛) = {A ⊆ X | A♯ ∈ 𝔛}. `big` must live on ultrafilter_points(x).
FinUltrafilter mult(const PointSet& x, const IterUltrafilter& big,
                    Mode mode = Mode::principal);

/// e_X : X → UX as a map between point sets.
FinMap unit_map(const PointSet& x);
/// m_X : UUX → UX.
FinMap mult_map(const PointSet& x);
/// Uf : UX → UY.
FinMap lift(const FinMap& f);

/// Ū r : UX ⇸ UY, Ū r(𝔵,𝔶) = sup_{A∈𝔵, B∈𝔶} inf_{x∈A, y∈B} r(x,y).
/// In principal mode this is r(x,y) on the underlying points.
NumRel extend(const NumRel& r, Mode mode = Mode::principal);

/// ξ(𝔳) = sup_{A∈𝔳} inf_{u∈A} u for an ultrafilter on a finite list of
/// costs, given by the position `at` of its point.
Cost xi(std::span<const Cost> carrier, std::size_t at, Mode mode = Mode::principal);

/// inf { ξ·Ur(𝔴) | 𝔴 ∈ U(X×Y), Uπ₁(𝔴) = 𝔵, Uπ₂(𝔴) = 𝔶 }, evaluated by
/// enumerating all ultrafilters on X×Y and using the literal forms of
/// push_forward and ξ. Needs |X|, |Y| and the number of distinct entries of
/// r within kLiteralCap.
Cost extU_pullback(const NumRel& r, const FinUltrafilter& x, const FinUltrafilter& y);

}  // namespace finapp
