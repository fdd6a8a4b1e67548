// SPDX-License-Identifier: Apache-2.0
#include "finapp/exponential.hpp"

#include <algorithm>

namespace finapp {

ContractionFn ContractionFn::certify(const ApproachSpace& s, std::vector<Cost> values) {
  if (values.size() != s.size()) {
    throw NotAContraction("function has " + std::to_string(values.size()) +
                          " values for a space of " + std::to_string(s.size()) +
                          " points");
  }
  if (auto bad = halfline_violation(s, values)) {
    throw NotAContraction("not a contraction into [0,inf]: a(" +
                          s.points().label(bad->y) + "^," + s.points().label(bad->x) +
                          ") = " + to_string(bad->lhs) + " < " + to_string(bad->rhs));
  }
  return ContractionFn(std::make_shared<const ApproachSpace>(s), std::move(values));
}

Cost d_principal(const ApproachSpace& s, const ContractionFn& psi,
                 const ContractionFn& phi) {
  if (!(psi.space() == s) || !(phi.space() == s)) {
    throw NotAContraction("d_principal: functions were not certified on this space");
  }
  Cost d;
  for (std::size_t x0 = 0; x0 < s.size(); ++x0) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      Cost gap = ominus(phi(x), psi(x0));
      if (s.conv(x0, x) < gap) d = join(d, gap);
    }
  }
  return d;
}

NumRel ProbeFamily::d_relation(const ApproachSpace& s) const {
  NumRel out(ultrafilter_points(labels), labels);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      out.at(i, j) = d_principal(s, members[i], members[j]);
  return out;
}

std::vector<ContractionFn> yoneda(const ApproachSpace& s) {
  std::vector<ContractionFn> out;
  out.reserve(s.size());
  for (std::size_t z = 0; z < s.size(); ++z) {
    std::vector<Cost> row;
    for (std::size_t x = 0; x < s.size(); ++x) row.push_back(s.conv(z, x));
    out.push_back(ContractionFn::certify(s, std::move(row)));
  }
  return out;
}

ContractionFn scale_fn(const Cost& u, const ContractionFn& phi) {
  std::vector<Cost> values;
  values.reserve(phi.size());
  for (const auto& c : phi.values()) values.push_back(join(u, c));
  return ContractionFn::certify(phi.space(), std::move(values));
}

bool ReplayReport::facts_hold() const {
  for (const auto& s : steps) {
    if (s.name.rfind("fact", 0) == 0 && !s.holds) return false;
  }
  return true;
}

const ReplayStep& ReplayReport::step(const std::string& name) const {
  auto it = std::find_if(steps.begin(), steps.end(),
                         [&](const ReplayStep& s) { return s.name == name; });
  if (it == steps.end()) throw std::out_of_range("no replay step named " + name);
  return *it;
}

namespace {

ReplayStep geq(std::string name, std::string statement, Cost lhs, Cost rhs) {
  bool holds = lhs >= rhs;
  return {std::move(name), std::move(statement), ">=", std::move(lhs), std::move(rhs), holds};
}

ReplayStep eq(std::string name, std::string statement, Cost lhs, Cost rhs) {
  bool holds = lhs == rhs;
  return {std::move(name), std::move(statement), "=", std::move(lhs), std::move(rhs), holds};
}

}  // namespace

ReplayReport replay_theorem(const ApproachSpace& s, std::size_t z, std::size_t x0,
                            const Cost& u, const Cost& v) {
  if (s.is_pseudo()) throw std::invalid_argument("replay needs an approach space");
  const std::size_t n = s.size();
  if (z >= n || x0 >= n) throw std::out_of_range("replay: point outside the space");
  const PointSet& xs = s.points();

  ReplayReport rep;
  rep.z = xs.label(z);
  rep.x0 = xs.label(x0);
  rep.u = u;
  rep.v = v;

  // Probe family: the Yoneda rows, their v-scalings, φ_{u,v} and v ⊙ φ_{u,v},
  // so that t_v is a total map on the family.
  const auto rows = yoneda(s);
  ContractionFn phi = ContractionFn::certify(s, phi_uv(s, z, u, v));
  std::vector<std::string> labels;
  ProbeFamily family;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("y(" + xs.label(x) + ")");
    family.members.push_back(rows[x]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("v|y(" + xs.label(x) + ")");
    family.members.push_back(scale_fn(v, rows[x]));
  }
  labels.emplace_back("phi");
  family.members.push_back(phi);
  labels.emplace_back("v|phi");
  family.members.push_back(scale_fn(v, phi));
  family.labels = PointSet(labels);
  const PointSet& fam = family.labels;
  const std::size_t phi_at = 2 * n;

  const PointSet ux = ultrafilter_points(xs);
  const FinUltrafilter big_x(ux, z);

  FinMap y{ux, fam, {}};
  for (std::size_t x = 0; x < n; ++x) y.image.push_back(x);
  const FinMap y0 = compose(unit_map(xs), y);

  FinMap pair{xs, product(fam, xs), {}};
  for (std::size_t x = 0; x < n; ++x) pair.image.push_back(x * n + x);

  FinMap t_v{fam, fam, {}};
  for (std::size_t x = 0; x < n; ++x) t_v.image.push_back(n + x);
  for (std::size_t x = 0; x < n; ++x) t_v.image.push_back(n + x);
  t_v.image.push_back(2 * n + 1);
  t_v.image.push_back(2 * n + 1);

  const FinUltrafilter p = push_forward(y, big_x);
  const FinUltrafilter big_p = push_forward(lift(y0), big_x);
  const FinUltrafilter big_q = push_forward(lift(pair), big_x);
  const FinUltrafilter flat_p = mult(fam, big_p);
  const FinUltrafilter flat_q = mult(product(fam, xs), big_q);
  const FinUltrafilter flat_x = mult(xs, big_x);
  const FinUltrafilter vp = push_forward(t_v, p);

  rep.big_x = "principal(" + big_x.point_label() + ")";
  rep.p = p.describe();
  rep.big_p = "principal(" + big_p.point_label() + ")";
  rep.big_q = "principal(" + big_q.point_label() + ")";
  rep.p_values = family.members[p.point()].values();
  rep.phi = phi.values();
  rep.log.push_back("X = " + rep.big_x + " in UUX; m_X(X) = " + flat_x.describe());
  rep.log.push_back("p = Uy(X) = " + p.describe() + "; v.p = " + vp.describe());
  rep.log.push_back("P = UUy0(X) = " + rep.big_p + "; m(P) = " + flat_p.describe());
  rep.log.push_back("Q = UU<y0,1>(X) = " + rep.big_q + "; m(Q) = " + flat_q.describe());

  const NumRel d = family.d_relation(s);
  const NumRel ud = extend(d);
  rep.log.push_back("principal reduction: Ud(P, q) = d(" + fam.label(big_p.point()) +
                    ", q) for every q");

  // ev : family × X → [0,inf], with ξ·Uev evaluated on its finite image.
  std::vector<Cost> ev_values;
  for (const auto& m : family.members)
    for (const auto& c : m.values()) ev_values.push_back(c);
  FinMap ev{product(fam, xs), PointSet{}, {}};
  {
    std::vector<Cost> distinct;
    std::vector<std::string> names;
    for (const auto& c : ev_values) {
      auto it = std::find(distinct.begin(), distinct.end(), c);
      if (it == distinct.end()) {
        ev.image.push_back(distinct.size());
        distinct.push_back(c);
        names.push_back(to_string(c));
      } else {
        ev.image.push_back(static_cast<std::size_t>(it - distinct.begin()));
      }
    }
    ev.target = PointSet(std::move(names));
    ev_values = std::move(distinct);
  }
  const Cost xi_ev_q = xi(ev_values, push_forward(ev, flat_q).point());
  rep.log.push_back("principal reduction: xi.Uev(m(Q)) = ev" + flat_q.point_label());

  const Cost ud_p_p = ud.at(big_p.point(), p.point());
  const Cost ud_p_vp = ud.at(big_p.point(), vp.point());
  const Cost d_vp_phi = d.at(vp.point(), phi_at);
  const Cost d_mp_phi = d.at(flat_p.point(), phi_at);
  const Cost& a_mx_x0 = s.conv(flat_x.point(), x0);

  const FinMap pi1 = FinMap::projection1(fam, xs);
  const FinMap pi2 = FinMap::projection2(fam, xs);
  const Cost d_prime = join(d.at(push_forward(pi1, flat_q).point(), phi_at),
                            s.conv(push_forward(pi2, flat_q).point(), x0));

  Cost phi_inf = Cost::infinity();
  const NumRel ua = extend(s.convergence());
  for (const auto& small : enumerate_ultrafilters(xs)) {
    phi_inf = meet(phi_inf, join(u, s.conv(small.point(), x0)) +
                                join(v, ua.at(big_x.point(), small.point())));
  }

  const Cost uv = u + v;
  rep.steps.push_back(eq("fact1_xi_ev", "xi.Uev.m(Q) = 0", xi_ev_q, Cost{}));
  rep.steps.push_back(eq("fact1_Ud", "Ud(P,p) = 0", ud_p_p, Cost{}));
  rep.steps.push_back(geq("fact2", "v >= Ud(P, v.p)", v, ud_p_vp));
  rep.steps.push_back(geq("fact3", "u >= d(v.p, phi)", u, d_vp_phi));
  rep.steps.push_back(geq("d_transitivity", "Ud(P, v.p) + d(v.p, phi) >= d(m(P), phi)",
                          ud_p_vp + d_vp_phi, d_mp_phi));
  rep.steps.push_back(geq("transitivity_bound", "u + v >= d(m(P), phi)", uv, d_mp_phi));
  rep.steps.push_back(geq("join_bound", "(u+v) v a(m(X),x0) >= d(m(P),phi) v a(m(X),x0)",
                          join(uv, a_mx_x0), join(d_mp_phi, a_mx_x0)));
  rep.steps.push_back(eq("product_structure", "d(m(P),phi) v a(m(X),x0) = d'(m(Q),(phi,x0))",
                         join(d_mp_phi, a_mx_x0), d_prime));
  rep.steps.push_back(geq("ev_contraction", "d'(m(Q),(phi,x0)) >= phi(x0) - xi.Uev.m(Q)",
                          d_prime, ominus(phi(x0), xi_ev_q)));
  rep.steps.push_back(eq("phi_value", "phi(x0) - xi.Uev.m(Q) = inf_x (u v a(x,x0)) + (v v Ua(X,x))",
                         ominus(phi(x0), xi_ev_q), phi_inf));
  rep.steps.push_back(geq("criterion", "(u+v) v a(m(X),x0) >= phi(x0)",
                          join(uv, a_mx_x0), phi(x0)));

  for (const auto& st : rep.steps) {
    if (!st.holds) {
      rep.first_failure = st.name;
      break;
    }
  }
  return rep;
}

}  // namespace finapp
