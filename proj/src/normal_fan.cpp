#include "pcup/normal_fan.hpp"

#include <algorithm>

#include "pcup/errors.hpp"
#include "pcup/lp.hpp"

namespace pcup {

namespace {

bool all_dot_zero(const std::vector<Vec>& rows, const Vec& u) {
  return std::all_of(rows.begin(), rows.end(), [&](const Vec& r) { return dot(r, u) == 0; });
}

// Normals of span(a) + span(b): the shift must be orthogonal to all of them
// for the shifted cone a to reach b at all.
std::vector<Vec> joint_normals(const NormalCone& a, const NormalCone& b) {
  std::vector<Vec> gens = a.hull_basis;
  gens.insert(gens.end(), b.hull_basis.begin(), b.hull_basis.end());
  return orthogonal_complement(gens, a.space_dim);
}

// Adds the constraints "x - shift in a" and "x in b" with x in the first m
// variables; tau (if present) is variable m and shift = s0 + tau s1.
void add_meeting_constraints(lp::Problem& lp, const NormalCone& a, const NormalCone& b,
                             const Vec& s0, const Vec* s1) {
  const std::size_t m = a.space_dim;
  auto row = [&](const Vec& coeffs, const Rat& tau_coeff) {
    Vec r(lp.num_vars, Rat(0));
    std::copy(coeffs.begin(), coeffs.end(), r.begin());
    if (s1) r[m] = tau_coeff;
    return r;
  };
  for (const auto& t : a.equalities)
    lp.add(row(t, s1 ? Rat(-dot(t, *s1)) : Rat(0)), lp::Relation::eq, dot(t, s0));
  for (const auto& w : a.inequalities)
    lp.add(row(w, s1 ? Rat(-dot(w, *s1)) : Rat(0)), lp::Relation::le, dot(w, s0));
  for (const auto& t : b.equalities) lp.add(row(t, 0), lp::Relation::eq, 0);
  for (const auto& w : b.inequalities) lp.add(row(w, 0), lp::Relation::le, 0);
}

}  // namespace

bool NormalCone::contains(const Vec& u) const {
  if (!all_dot_zero(equalities, u)) return false;
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const Vec& w) { return dot(w, u) <= 0; });
}

bool NormalCone::contains_relint(const Vec& u) const {
  if (!all_dot_zero(equalities, u)) return false;
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const Vec& w) { return dot(w, u) < 0; });
}

const NormalCone& Fan::cone(CellId face) const {
  auto it = cones.find(face);
  if (it == cones.end())
    throw Error(ErrorKind::invalid_cell, "cell " + std::to_string(face) + " is not a face of cell " +
                                             std::to_string(carrier));
  return it->second;
}

Fan compute_fan(const PComplex& x, CellId gamma) {
  const Cell& g = x.cell(gamma);
  const auto m = static_cast<std::size_t>(g.dim);
  Fan fan;
  fan.carrier = gamma;
  fan.faces = g.faces;
  for (auto v : g.vertices) fan.vertex_coords.push_back(x.point_coords(gamma, x.vertex(v)));

  const Vec bary = x.point_coords(gamma, x.barycenter(gamma));
  for (const auto& [f, s] : g.facets) {
    std::vector<Vec> tangent;
    for (const auto& t : x.cell(f).tangent) tangent.push_back(x.coords(gamma, t));
    Vec h = orthogonal_complement(tangent, m).front();
    if (dot(h, x.point_coords(gamma, x.barycenter(f)) - bary) < 0) h = -h;
    fan.facet_normals.emplace(f, std::move(h));
  }

  for (CellId delta : g.faces) {
    const Cell& d = x.cell(delta);
    NormalCone cone;
    cone.carrier = gamma;
    cone.face = delta;
    cone.space_dim = m;
    for (const auto& t : d.tangent) cone.equalities.push_back(x.coords(gamma, t));
    cone.hull_basis = orthogonal_complement(cone.equalities, m);
    if (!cone.hull_basis.empty()) {
      std::vector<Vec> cols = cone.equalities;
      cols.insert(cols.end(), cone.hull_basis.begin(), cone.hull_basis.end());
      if (det_sign(Mat::from_columns(cols, m)) < 0) cone.hull_basis.front() = -cone.hull_basis.front();
    }
    const Vec anchor = x.point_coords(gamma, x.vertex(d.orient.front()));
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
      if (!std::binary_search(d.vertices.begin(), d.vertices.end(), g.vertices[k]))
        cone.inequalities.push_back(fan.vertex_coords[k] - anchor);
    cone.interior = zeros(m);
    for (const auto& [f, normal] : fan.facet_normals)
      if (x.is_face(delta, f)) cone.interior = cone.interior + normal;
    fan.cones.emplace(delta, std::move(cone));
  }
  return fan;
}

const NormalCone& dual_cone(const PComplex& x, CellId gamma, CellId delta) {
  return x.fan(gamma).cone(delta);
}

Vec project_to_cell(const PComplex& x, const Vec& v, CellId gamma) {
  if (v.size() != x.ambient_dim())
    throw Error(ErrorKind::dimension_mismatch, "covector has dimension " +
                                                   std::to_string(v.size()) + ", expected " +
                                                   std::to_string(x.ambient_dim()));
  Vec out;
  for (const auto& t : x.cell(gamma).tangent) out.push_back(dot(v, t));
  return out;
}

Vec facet_normal(const PComplex& x, CellId gamma, CellId facet) {
  const auto& normals = x.fan(gamma).facet_normals;
  auto it = normals.find(facet);
  if (it == normals.end())
    throw Error(ErrorKind::invalid_cell, "cell " + std::to_string(facet) +
                                             " is not a facet of cell " + std::to_string(gamma));
  return it->second;
}

Chain dualize_cochain(const PComplex& x, CellId gamma, const Cochain& r) {
  const int m = x.cell(gamma).dim;
  Chain out(m - r.degree(), r.ring());
  for (CellId delta : x.cell(gamma).faces)
    if (x.cell(delta).dim == r.degree()) out.set(delta, r[delta]);
  return out;
}

int cone_incidence(const PComplex& x, CellId gamma, CellId face, CellId facet) {
  const Fan& fan = x.fan(gamma);
  const NormalCone& big = fan.cone(face);
  const NormalCone& small = fan.cone(facet);
  if (small.dim() + 1 != big.dim() || !x.is_face(face, facet))
    throw Error(ErrorKind::invalid_cell, "cone of cell " + std::to_string(facet) +
                                             " is not a facet of the cone of cell " +
                                             std::to_string(face));
  // The outward direction across the facet cone, taken modulo its span.
  const BasisCoordinates frame(big.hull_basis, big.space_dim);
  std::vector<Vec> cols{frame.coords(-big.interior)};
  for (const auto& h : small.hull_basis) cols.push_back(frame.coords(h));
  return det_sign(Mat::from_columns(cols, big.dim()));
}

Chain fan_boundary(const PComplex& x, CellId gamma, const Chain& c) {
  Chain out(c.degree() - 1, c.ring());
  for (const auto& [face, value] : c.values())
    for (CellId up : x.cell(face).cofacets)
      if (x.is_face(up, gamma))
        out.add(up, Rat(cone_incidence(x, gamma, face, up)) * value);
  return out;
}

bool cones_meet(const NormalCone& a, const NormalCone& b, const Vec& shift) {
  for (const auto& n : joint_normals(a, b))
    if (dot(n, shift) != 0) return false;
  lp::Problem lp(a.space_dim, true);
  add_meeting_constraints(lp, a, b, shift, nullptr);
  return lp::feasible(lp);
}

std::optional<std::pair<Rat, Rat>> meeting_interval(const NormalCone& a, const NormalCone& b,
                                                    const Vec& s0, const Vec& s1) {
  std::optional<Rat> fixed;
  for (const auto& n : joint_normals(a, b)) {
    const Rat alpha = dot(n, s0), beta = dot(n, s1);
    if (beta == 0) {
      if (alpha != 0) return std::nullopt;
      continue;
    }
    const Rat tau = -alpha / beta;
    if (fixed && *fixed != tau) return std::nullopt;
    fixed = tau;
  }
  if (fixed) {
    if (*fixed < 0 || *fixed > 1) return std::nullopt;
    if (!cones_meet(a, b, s0 + *fixed * s1)) return std::nullopt;
    return std::make_pair(*fixed, *fixed);
  }
  const std::size_t m = a.space_dim;
  lp::Problem lp(m + 1, true);
  lp.is_free[m] = false;
  add_meeting_constraints(lp, a, b, s0, &s1);
  lp.add(unit(m + 1, m), lp::Relation::le, 1);
  const Vec tau = unit(m + 1, m);
  const auto lo = lp::minimize(lp, tau);
  if (lo.status != lp::Status::optimal) return std::nullopt;
  const auto hi = lp::maximize(lp, tau);
  return std::make_pair(lo.value, hi.value);
}

int duality_sign(int p, int /*m*/) { return p % 2 == 0 ? -1 : 1; }

}  // namespace pcup
