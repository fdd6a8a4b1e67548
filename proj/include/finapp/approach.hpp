// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "finapp/cost.hpp"
#include "finapp/numrel.hpp"
#include "finapp/ultra.hpp"

namespace finapp {

/// Outcome of checking the convergence axioms on a square matrix δm with
/// δm(z, x) = a(ż, x).
///
/// On failure `witness` holds (x) for reflexivity or (z, y, x) for
/// transitivity, and the failed inequality is `lhs >= rhs`.
struct AxiomReport {
  enum class Failure { none, reflexivity, transitivity };

  Failure failure = Failure::none;
  std::vector<std::size_t> witness;
  Cost lhs;
  Cost rhs;

  bool ok() const noexcept { return failure == Failure::none; }
  std::string describe(const PointSet& points) const;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

/// Zero diagonal and the triangle inequality δm(z,y) + δm(y,x) >= δm(z,x).
AxiomReport check_axioms_matrix(const NumRel& m);

/// The axioms e° >= a and a·Ūa >= a·m checked pointwise over all
/// 𝔛 ∈ UUX, 𝔵 ∈ UX, x ∈ X with the literal forms of Ū and m.
/// Requires |X| <= kLiteralCap.
AxiomReport check_axioms_enumerative(const NumRel& m);

/// Carriers up to this size get the enumerative cross-check in
/// check_axioms; literal Ū costs 4^n per entry.
inline constexpr std::size_t kAxiomCrossCheckCap = 6;

/// Runs both checkers and throws std::logic_error if they disagree in
/// verdict or witness. Above kAxiomCrossCheckCap points only the matrix
/// check runs.
AxiomReport check_axioms(const NumRel& m);

/// Reflexivity only (the pseudo-approach condition).
AxiomReport check_reflexive(const NumRel& m);

class InvalidSpace : public std::invalid_argument {
 public:
  InvalidSpace(const std::string& what, AxiomReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

/// A finite approach space, stored as the square matrix δm(z, x) = a(ż, x)
/// of its ultrafilter convergence restricted to principal ultrafilters.
/// A pseudo space is only required to be reflexive.
class ApproachSpace {
 public:
  /// Validates the axioms; throws InvalidSpace with the failing witness.
  static ApproachSpace from_matrix(NumRel m);
  /// Accepts any reflexive matrix.
  static ApproachSpace pseudo(NumRel m);

  static ApproachSpace one_point();
  /// 0 on the diagonal, inf elsewhere.
  static ApproachSpace discrete(const PointSet& points);
  /// The topological space of a finite preorder: δm(z,x) = 0 if
  /// related(z,x) and inf otherwise. `related` is row-major |X|×|X|.
  static ApproachSpace from_preorder(const PointSet& points,
                                     const std::vector<bool>& related);

  const PointSet& points() const noexcept { return matrix_.source(); }
  std::size_t size() const noexcept { return matrix_.rows(); }
  const Cost& conv(std::size_t z, std::size_t x) const { return matrix_.at(z, x); }
  const NumRel& matrix() const noexcept { return matrix_; }
  bool is_pseudo() const noexcept { return pseudo_; }

  /// a : UX ⇸ X.
  NumRel convergence() const;

  friend bool operator==(const ApproachSpace&, const ApproachSpace&) = default;

 private:
  ApproachSpace(NumRel m, bool pseudo) : matrix_(std::move(m)), pseudo_(pseudo) {}

  NumRel matrix_;
  bool pseudo_ = false;
};

/// The distance δ : PX × X → [0,inf], tabulated over all subsets.
class DistanceView {
 public:
  /// `table[a * |X| + x]` is δ(A, x) for the subset with bitmask a.
  DistanceView(PointSet points, std::vector<Cost> table);

  /// Tabulates δ(A,x) = inf_{𝔵 ∋ A} a(𝔵, x) for every A. |X| <= kLiteralCap.
  static DistanceView of(const ApproachSpace& s);

  const PointSet& points() const noexcept { return points_; }
  const Cost& at(Subset a, std::size_t x) const {
    return table_.at(static_cast<std::size_t>(a) * points_.size() + x);
  }

 private:
  PointSet points_;
  std::vector<Cost> table_;
};

/// δ(A, x) = inf_{A ∈ 𝔵} a(𝔵, x), evaluated through ultrafilter membership.
Cost dist_from_conv(const ApproachSpace& s, Subset a, std::size_t x);

/// a(ż, x) = sup_{A ∈ ż} δ(A, x), as a square matrix.
NumRel conv_from_dist(const DistanceView& d);

/// Outcome of checking the four distance axioms. `axiom` is 0 on success,
/// otherwise the number of the first failing axiom; the failed relation is
/// `lhs >= rhs` (axiom 4), or `lhs == rhs` (axioms 1 to 3).
struct DeltaReport {
  int axiom = 0;
  Subset a = 0;
  Subset b = 0;
  std::size_t x = 0;
  Cost eps;
  Cost lhs;
  Cost rhs;

  bool ok() const noexcept { return axiom == 0; }
  std::string describe(const PointSet& points) const;
};

/// Exhaustive over subsets, with ε ranging over 0, inf, every table value
/// and every positive difference of finite table values. |X| <= 10.
DeltaReport check_delta_axioms(const DistanceView& d);

/// Contraction check for f : X → Y in two forms: a(𝔵,x) >= b(Uf(𝔵), f(x))
/// over ultrafilters, and δ(A,x) >= δ'(f(A), f(x)) over subsets.
struct ContractionReport {
  bool ok = true;
  /// First violating (z, x) in the ultrafilter form.
  std::size_t z = 0;
  std::size_t x = 0;
  Cost lhs;
  Cost rhs;
  /// Whether the subset form was evaluated (|X| <= kLiteralCap).
  bool set_form_checked = false;
  Subset set_witness = 0;
  std::size_t set_point = 0;
};

/// Throws std::logic_error if the two forms disagree, ShapeError if f does
/// not go from s.points() to t.points().
ContractionReport is_contraction(const FinMap& f, const ApproachSpace& s,
                                 const ApproachSpace& t);

/// The product space on X×Y: δm((z,w),(x,y)) = δm_S(z,x) ∨ δm_T(w,y).
ApproachSpace product(const ApproachSpace& s, const ApproachSpace& t);

/// Convergence of the half-line [0,inf] at a principal ultrafilter v̇0:
/// v ⊖ v0.
Cost halfline_b(const Cost& v0, const Cost& v);

/// First (y, x) where φ fails to be a contraction into the half-line,
/// i.e. δm(y,x) < φ(x) ⊖ φ(y).
struct HalflineViolation {
  std::size_t y;
  std::size_t x;
  Cost lhs;
  Cost rhs;
};
std::optional<HalflineViolation> halfline_violation(const ApproachSpace& s,
                                                    std::span<const Cost> phi);

/// The certificate a · Ūφ · e₁ >= φ for φ read as a relation 1 ⇸ X,
/// computed with relation composition and the extension Ū.
bool contraction_certificate(const ApproachSpace& s, std::span<const Cost> phi);

/// φ_{u,v}(x) = min_y (u ∨ δm(y,x)) + (v ∨ δm(z,y)) for 𝔛 principal at ż.
std::vector<Cost> phi_uv(const ApproachSpace& s, std::size_t z, const Cost& u,
                         const Cost& v);

}  // namespace finapp
