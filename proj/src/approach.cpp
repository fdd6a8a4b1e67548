// SPDX-License-Identifier: Apache-2.0
#include "finapp/approach.hpp"

#include <algorithm>
#include <sstream>

namespace finapp {

namespace {

void require_square(const NumRel& m) {
  if (!(m.source() == m.target())) {
    throw ShapeError("convergence matrix must be square over one point set");
  }
}

std::string subset_text(const PointSet& points, Subset a) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!member(a, i)) continue;
    if (!first) out += ",";
    out += points.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string AxiomReport::describe(const PointSet& points) const {
  std::ostringstream os;
  switch (failure) {
    case Failure::none:
      return "axioms hold";
    case Failure::reflexivity:
      os << "reflexivity fails at " << points.label(witness[0]) << ": a("
         << points.label(witness[0]) << "^," << points.label(witness[0])
         << ") = " << rhs << " > 0";
      break;
    case Failure::transitivity:
      os << "transitivity fails at (" << points.label(witness[0]) << ","
         << points.label(witness[1]) << "," << points.label(witness[2])
         << "): " << lhs << " < " << rhs;
      break;
  }
  return os.str();
}

AxiomReport check_reflexive(const NumRel& m) {
  require_square(m);
  for (std::size_t x = 0; x < m.rows(); ++x) {
    if (!m.at(x, x).is_zero()) {
      return {AxiomReport::Failure::reflexivity, {x}, Cost{}, m.at(x, x)};
    }
  }
  return {};
}

AxiomReport check_axioms_matrix(const NumRel& m) {
  if (auto r = check_reflexive(m); !r.ok()) return r;
  const std::size_t n = m.rows();
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t y = 0; y < n; ++y) {
      if (m.at(z, y).is_infinite()) continue;
      for (std::size_t x = 0; x < n; ++x) {
        Cost lhs = m.at(z, y) + m.at(y, x);
        if (lhs < m.at(z, x)) {
          return {AxiomReport::Failure::transitivity, {z, y, x}, lhs, m.at(z, x)};
        }
      }
    }
  }
  return {};
}

AxiomReport check_axioms_enumerative(const NumRel& m) {
  require_square(m);
  const PointSet& xs = m.source();
  const std::size_t n = xs.size();
  const PointSet ux = ultrafilter_points(xs);
  const NumRel a(ux, xs, m.entries());

  // e_X° >= a
  const NumRel unit_converse = converse(from_map(unit_map(xs)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (unit_converse.at(i, x) < a.at(i, x)) {
        return {AxiomReport::Failure::reflexivity, {x}, unit_converse.at(i, x),
                a.at(i, x)};
      }
    }
  }

  // Ū a(𝔛,𝔵) + a(𝔵,x) >= a(m_X(𝔛), x)
  const NumRel ua = extend(a, Mode::literal);
  for (const auto& big : enumerate_ultrafilters(ux)) {
    const FinUltrafilter flat = mult(xs, big, Mode::literal);
    for (const auto& small : enumerate_ultrafilters(xs)) {
      const Cost& first = ua.at(big.point(), small.point());
      for (std::size_t x = 0; x < n; ++x) {
        Cost lhs = first + a.at(small.point(), x);
        const Cost& rhs = a.at(flat.point(), x);
        if (lhs < rhs) {
          return {AxiomReport::Failure::transitivity,
                  {big.point(), small.point(), x}, lhs, rhs};
        }
      }
    }
  }
  return {};
}

AxiomReport check_axioms(const NumRel& m) {
  AxiomReport fast = check_axioms_matrix(m);
  if (m.rows() > kAxiomCrossCheckCap) return fast;
  AxiomReport full = check_axioms_enumerative(m);
  if (!(fast == full)) {
    throw std::logic_error("axiom checkers disagree: matrix says '" +
                           fast.describe(m.source()) + "', enumeration says '" +
                           full.describe(m.source()) + "'");
  }
  return fast;
}

ApproachSpace ApproachSpace::from_matrix(NumRel m) {
  AxiomReport r = check_axioms(m);
  if (!r.ok()) throw InvalidSpace("not an approach space: " + r.describe(m.source()), r);
  return ApproachSpace(std::move(m), false);
}

ApproachSpace ApproachSpace::pseudo(NumRel m) {
  AxiomReport r = check_reflexive(m);
  if (!r.ok()) {
    throw InvalidSpace("not a pseudo-approach space: " + r.describe(m.source()), r);
  }
  return ApproachSpace(std::move(m), true);
}

ApproachSpace ApproachSpace::one_point() {
  return discrete(PointSet{"*"});
}

ApproachSpace ApproachSpace::discrete(const PointSet& points) {
  return from_matrix(identity(points));
}

ApproachSpace ApproachSpace::from_preorder(const PointSet& points,
                                           const std::vector<bool>& related) {
  const std::size_t n = points.size();
  if (related.size() != n * n) throw ShapeError("preorder table has wrong size");
  NumRel m(points, points);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      if (related[z * n + x]) m.at(z, x) = Cost{};
  return from_matrix(std::move(m));
}

NumRel ApproachSpace::convergence() const {
  return NumRel(ultrafilter_points(points()), points(), matrix_.entries());
}

DistanceView::DistanceView(PointSet points, std::vector<Cost> table)
    : points_(std::move(points)), table_(std::move(table)) {
  if (points_.size() > kLiteralCap) {
    throw std::invalid_argument("distance view limited to " +
                                std::to_string(kLiteralCap) + " points");
  }
  if (table_.size() != (std::size_t{1} << points_.size()) * points_.size()) {
    throw ShapeError("distance table has wrong size");
  }
}

Cost dist_from_conv(const ApproachSpace& s, Subset a, std::size_t x) {
  Cost best = Cost::infinity();
  for (const auto& u : enumerate_ultrafilters(s.points())) {
    if (u.contains(a)) best = meet(best, s.conv(u.point(), x));
  }
  return best;
}

DistanceView DistanceView::of(const ApproachSpace& s) {
  const std::size_t n = s.size();
  if (n > kLiteralCap) throw std::invalid_argument("distance view limited in size");
  std::vector<Cost> table;
  table.reserve((std::size_t{1} << n) * n);
  for (Subset a = 0; a <= full_set(n); ++a)
    for (std::size_t x = 0; x < n; ++x) table.push_back(dist_from_conv(s, a, x));
  return DistanceView(s.points(), std::move(table));
}

NumRel conv_from_dist(const DistanceView& d) {
  const std::size_t n = d.points().size();
  NumRel out(d.points(), d.points(), Cost{});
  for (const auto& u : enumerate_ultrafilters(d.points())) {
    for (std::size_t x = 0; x < n; ++x) {
      Cost sup;
      for (Subset a : u.members()) sup = join(sup, d.at(a, x));
      out.at(u.point(), x) = sup;
    }
  }
  return out;
}

std::string DeltaReport::describe(const PointSet& points) const {
  std::ostringstream os;
  switch (axiom) {
    case 0:
      return "distance axioms hold";
    case 1:
      os << "axiom (1) fails: d({" << points.label(x) << "}," << points.label(x)
         << ") = " << lhs;
      break;
    case 2:
      os << "axiom (2) fails: d({}," << points.label(x) << ") = " << lhs;
      break;
    case 3:
      os << "axiom (3) fails: d(" << subset_text(points, a) << " u "
         << subset_text(points, b) << "," << points.label(x) << ") = " << lhs
         << " but min = " << rhs;
      break;
    default:
      os << "axiom (4) fails: A = " << subset_text(points, a) << ", x = "
         << points.label(x) << ", eps = " << eps << ": " << lhs << " < " << rhs;
  }
  return os.str();
}

DeltaReport check_delta_axioms(const DistanceView& d) {
  const std::size_t n = d.points().size();
  if (n > 10) throw std::invalid_argument("check_delta_axioms limited to 10 points");
  const Subset all = full_set(n);
  DeltaReport r;

  for (std::size_t x = 0; x < n; ++x) {
    if (!d.at(singleton(x), x).is_zero()) {
      r.axiom = 1;
      r.a = singleton(x);
      r.x = x;
      r.lhs = d.at(singleton(x), x);
      r.rhs = Cost{};
      return r;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!d.at(0, x).is_infinite()) {
      r.axiom = 2;
      r.x = x;
      r.lhs = d.at(0, x);
      r.rhs = Cost::infinity();
      return r;
    }
  }
  for (Subset a = 0; a <= all; ++a) {
    for (Subset b = 0; b <= all; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        Cost m = meet(d.at(a, x), d.at(b, x));
        if (!(d.at(a | b, x) == m)) {
          r.axiom = 3;
          r.a = a;
          r.b = b;
          r.x = x;
          r.lhs = d.at(a | b, x);
          r.rhs = m;
          return r;
        }
      }
    }
  }

  // δ is piecewise constant in ε with breakpoints at table values.
  std::vector<Cost> finite;
  std::vector<Cost> grid{Cost{}, Cost::infinity()};
  for (Subset a = 0; a <= all; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      const Cost& c = d.at(a, x);
      grid.push_back(c);
      if (c.is_finite()) finite.push_back(c);
    }
  }
  std::sort(finite.begin(), finite.end());
  finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
  for (std::size_t i = 0; i < finite.size(); ++i)
    for (std::size_t j = i + 1; j < finite.size(); ++j)
      grid.push_back(ominus(finite[j], finite[i]));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  for (Subset a = 0; a <= all; ++a) {
    for (const Cost& eps : grid) {
      Subset hull = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (d.at(a, y) <= eps) hull |= singleton(y);
      }
      for (std::size_t x = 0; x < n; ++x) {
        Cost lhs = d.at(hull, x) + eps;
        if (lhs < d.at(a, x)) {
          r.axiom = 4;
          r.a = a;
          r.x = x;
          r.eps = eps;
          r.lhs = lhs;
          r.rhs = d.at(a, x);
          return r;
        }
      }
    }
  }
  return r;
}

ContractionReport is_contraction(const FinMap& f, const ApproachSpace& s,
                                 const ApproachSpace& t) {
  if (!(f.source == s.points()) || !(f.target == t.points())) {
    throw ShapeError("map does not go between the given spaces");
  }
  ContractionReport rep;
  for (const auto& u : enumerate_ultrafilters(s.points())) {
    const FinUltrafilter image = push_forward(f, u);
    for (std::size_t x = 0; x < s.size(); ++x) {
      const Cost& lhs = s.conv(u.point(), x);
      const Cost& rhs = t.conv(image.point(), f(x));
      if (lhs < rhs) {
        rep.ok = false;
        rep.z = u.point();
        rep.x = x;
        rep.lhs = lhs;
        rep.rhs = rhs;
        break;
      }
    }
    if (!rep.ok) break;
  }

  if (s.size() <= kLiteralCap && t.size() <= kLiteralCap) {
    rep.set_form_checked = true;
    bool set_ok = true;
    const Subset all = full_set(s.size());
    for (Subset a = 0; a <= all && set_ok; ++a) {
      Subset fa = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (member(a, i)) fa |= singleton(f(i));
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (dist_from_conv(s, a, x) < dist_from_conv(t, fa, f(x))) {
          set_ok = false;
          rep.set_witness = a;
          rep.set_point = x;
          break;
        }
      }
    }
    if (set_ok != rep.ok) {
      throw std::logic_error("contraction forms disagree");
    }
  }
  return rep;
}

ApproachSpace product(const ApproachSpace& s, const ApproachSpace& t) {
  const PointSet pts = product(s.points(), t.points());
  const std::size_t m = t.size();
  NumRel out(pts, pts);
  for (std::size_t z = 0; z < s.size(); ++z)
    for (std::size_t w = 0; w < m; ++w)
      for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < m; ++y)
          out.at(z * m + w, x * m + y) = join(s.conv(z, x), t.conv(w, y));
  if (s.is_pseudo() || t.is_pseudo()) return ApproachSpace::pseudo(std::move(out));
  return ApproachSpace::from_matrix(std::move(out));
}

Cost halfline_b(const Cost& v0, const Cost& v) { return ominus(v, v0); }

std::optional<HalflineViolation> halfline_violation(const ApproachSpace& s,
                                                    std::span<const Cost> phi) {
  if (phi.size() != s.size()) throw ShapeError("function has wrong length");
  for (std::size_t y = 0; y < s.size(); ++y) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      Cost rhs = halfline_b(phi[y], phi[x]);
      if (s.conv(y, x) < rhs) return HalflineViolation{y, x, s.conv(y, x), rhs};
    }
  }
  return std::nullopt;
}

bool contraction_certificate(const ApproachSpace& s, std::span<const Cost> phi) {
  if (phi.size() != s.size()) throw ShapeError("function has wrong length");
  const PointSet one{"*"};
  const NumRel as_rel(one, s.points(), std::vector<Cost>(phi.begin(), phi.end()));
  const Mode mode = s.size() <= kLiteralCap ? Mode::literal : Mode::principal;
  const NumRel e1 = from_map(unit_map(one));
  const NumRel lifted = extend(as_rel, mode);
  const NumRel composite = compose(compose(e1, lifted), s.convergence());
  return leq(composite, as_rel);
}

std::vector<Cost> phi_uv(const ApproachSpace& s, std::size_t z, const Cost& u,
                         const Cost& v) {
  if (z >= s.size()) throw std::out_of_range("phi_uv: z outside the space");
  std::vector<Cost> out;
  out.reserve(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    Cost best = Cost::infinity();
    for (std::size_t y = 0; y < s.size(); ++y) {
      best = meet(best, join(u, s.conv(y, x)) + join(v, s.conv(z, y)));
    }
    out.push_back(std::move(best));
  }
  return out;
}

}  // namespace finapp
