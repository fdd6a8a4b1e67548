// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "finapp/approach.hpp"

namespace finapp {

class NotAContraction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A contraction φ : X → [0,inf], i.e. an element of the exponential
/// [0,inf]^X. Only obtainable through `certify`, which checks
/// δm(y,x) >= φ(x) ⊖ φ(y) for all y, x.
class ContractionFn {
 public:
  /// Throws NotAContraction naming the first violating pair.
  static ContractionFn certify(const ApproachSpace& s, std::vector<Cost> values);

  const ApproachSpace& space() const noexcept { return *space_; }
  const std::vector<Cost>& values() const noexcept { return values_; }
  const Cost& operator()(std::size_t x) const { return values_.at(x); }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const ContractionFn& a, const ContractionFn& b) {
    return a.values_ == b.values_ && *a.space_ == *b.space_;
  }

 private:
  ContractionFn(std::shared_ptr<const ApproachSpace> s, std::vector<Cost> v)
      : space_(std::move(s)), values_(std::move(v)) {}

  std::shared_ptr<const ApproachSpace> space_;
  std::vector<Cost> values_;
};

/// The exponential convergence d(ψ̇, φ) at a principal ultrafilter:
///   inf { u | for all x0, x: (u ∨ δm(x0,x)) + ψ(x0) >= φ(x) }.
/// Throws NotAContraction if ψ or φ was certified against another space.
Cost d_principal(const ApproachSpace& s, const ContractionFn& psi,
                 const ContractionFn& phi);

/// A labelled finite window into [0,inf]^X.
struct ProbeFamily {
  PointSet labels;
  std::vector<ContractionFn> members;

  /// d restricted to the family: a relation U(family) ⇸ family.
  NumRel d_relation(const ApproachSpace& s) const;
};

/// ż ↦ (x ↦ δm(z,x)), indexed by z. Entry z is also y₀(z) = y(ż).
std::vector<ContractionFn> yoneda(const ApproachSpace& s);

/// u ⊙ φ, pointwise join with u.
ContractionFn scale_fn(const Cost& u, const ContractionFn& phi);

/// One named quantity or inequality of the replayed argument. `relation`
/// is ">=" or "=", read as `lhs relation rhs`.
struct ReplayStep {
  std::string name;
  std::string statement;
  std::string relation;
  Cost lhs;
  Cost rhs;
  bool holds = true;
};

struct ReplayReport {
  std::string z;
  std::string x0;
  Cost u;
  Cost v;

  /// Descriptions of the constructed ultrafilters.
  std::string big_x;  // 𝔛 ∈ UUX
  std::string p;      // Uy(𝔛) ∈ U([0,inf]^X)
  std::string big_p;  // UUy₀(𝔛)
  std::string big_q;  // UU⟨y₀,1⟩(𝔛)

  std::vector<Cost> p_values;
  std::vector<Cost> phi;
  std::vector<ReplayStep> steps;
  std::vector<std::string> log;

  /// Name of the first step that fails, if any.
  std::optional<std::string> first_failure;

  /// The three facts established without exponentiability.
  bool facts_hold() const;
  bool chain_holds() const { return !first_failure; }
  const ReplayStep& step(const std::string& name) const;
};

/// Evaluates each quantity and inequality of the necessity argument at
/// 𝔛 = principal(principal(z)), x0, u, v, in order. Ū d at iterated
/// principal ultrafilters is reduced to d at the underlying points, and the
/// reduction is recorded in `log`. Requires a valid (non-pseudo) space.
ReplayReport replay_theorem(const ApproachSpace& s, std::size_t z, std::size_t x0,
                            const Cost& u, const Cost& v);

}  // namespace finapp
