#include "pcup/discriminant.hpp"

#include <algorithm>
#include <map>

#include "pcup/normal_fan.hpp"

namespace pcup {

namespace {

std::vector<Vec> meet_basis(const PComplex& x, CellId a, CellId b) {
  const std::size_t n = x.ambient_dim();
  std::vector<Vec> normals = orthogonal_complement(x.cell(a).tangent, n);
  const auto nb = orthogonal_complement(x.cell(b).tangent, n);
  normals.insert(normals.end(), nb.begin(), nb.end());
  return orthogonal_complement(normals, n);
}

std::set<DegreePair> positive_levels(const PComplex& x) {
  std::set<DegreePair> out;
  for (int total = 2; total <= x.top_dim(); ++total)
    for (int p = 1; p < total; ++p) out.insert({p, total - p});
  return out;
}

std::vector<CellId> faces_of(const PComplex& x, CellId cell, int d) {
  std::vector<CellId> out;
  for (CellId f : x.cell(cell).faces)
    if (x.cell(f).dim == d) out.push_back(f);
  return out;
}

// Sign of the tuple of vectors of V_cell against the cell's orientation.
int orientation_in(const PComplex& x, CellId cell, const std::vector<Vec>& vectors) {
  std::vector<Vec> cols;
  for (const auto& v : vectors) cols.push_back(x.coords(cell, v));
  return det_sign(Mat::from_columns(cols, static_cast<std::size_t>(x.cell(cell).dim)));
}

// Extends `start` to a basis of V_cell with vectors of the cell's tangent.
std::vector<Vec> complete_basis(const PComplex& x, CellId cell, std::vector<Vec> start) {
  const std::size_t n = x.ambient_dim();
  for (const auto& t : x.cell(cell).tangent) {
    start.push_back(t);
    if (rank(start, n) < start.size()) start.pop_back();
  }
  return start;
}

bool uncommon_at(const PComplex& x, const Vec& u, int p, int q) {
  for (const auto& t : lambda_triples(x, p, q)) {
    if (t.meet_dim <= 1) continue;
    const Fan& fan = x.fan(t.mu);
    if (cones_meet(fan.cone(t.delta), fan.cone(t.lambda), project_to_cell(x, u, t.mu)))
      return true;
  }
  return false;
}

}  // namespace

std::vector<LambdaTriple> lambda_triples(const PComplex& x, int p, int q) {
  std::vector<LambdaTriple> out;
  if (p < 1 || q < 1) return out;
  for (CellId mu : x.cells_of_dim(p + q)) {
    for (CellId delta : faces_of(x, mu, p)) {
      for (CellId lambda : faces_of(x, mu, q)) {
        const auto meet = meet_basis(x, delta, lambda);
        if (meet.empty()) continue;
        LambdaTriple t{delta, lambda, mu, p, q, static_cast<int>(meet.size()), {}};
        if (meet.size() == 1) t.line = canonical_line(meet.front());
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

std::vector<SpecialTriple> special_triples(const PComplex& x, int p, int q) {
  std::vector<SpecialTriple> out;
  std::set<std::tuple<CellId, CellId, CellId>> seen;
  for (const auto& t : lambda_triples(x, p, q)) {
    if (t.meet_dim != 1) continue;
    for (const auto& [gamma, s] : x.cell(t.mu).facets) {
      if (!x.is_face(t.delta, gamma) || !x.is_face(t.lambda, gamma)) continue;
      if (!seen.insert({t.delta, t.lambda, gamma}).second) continue;
      out.push_back({t.delta, t.lambda, gamma, p, q, t.line});
    }
  }
  std::sort(out.begin(), out.end(), [](const SpecialTriple& a, const SpecialTriple& b) {
    return std::tie(a.gamma, a.delta, a.lambda) < std::tie(b.gamma, b.delta, b.lambda);
  });
  return out;
}

std::vector<SpecialTriple> special_triples(const PComplex& x) {
  std::vector<SpecialTriple> out;
  for (const auto& [p, q] : positive_levels(x)) {
    auto level = special_triples(x, p, q);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Hyperplane> discriminant(const PComplex& x) {
  std::map<Vec, std::vector<SpecialTriple>> by_line;
  for (auto& t : special_triples(x)) by_line[t.line].push_back(t);
  std::vector<Hyperplane> out;
  for (auto& [line, triples] : by_line) out.push_back({line, std::move(triples)});
  return out;
}

std::vector<Hyperplane> unconvenient_hyperplanes(const PComplex& x,
                                                 const std::set<DegreePair>& degrees) {
  std::set<Vec> lines;
  for (const auto& [p, q] : degrees.empty() ? positive_levels(x) : degrees)
    for (const auto& t : lambda_triples(x, p, q))
      if (t.meet_dim == 1) lines.insert(t.line);
  std::vector<Hyperplane> out;
  for (const auto& l : lines) out.push_back({l, {}});
  return out;
}

const char* to_string(PointClass::Kind kind) {
  switch (kind) {
    case PointClass::Kind::convenient: return "convenient";
    case PointClass::Kind::on_unconvenient_hyperplane: return "on-unconvenient-hyperplane";
    case PointClass::Kind::uncommon: return "uncommon";
    case PointClass::Kind::mixed: return "mixed";
  }
  return "?";
}

std::string PointClass::to_string() const {
  std::string out = pcup::to_string(kind);
  if (!hyperplanes.empty()) {
    out += " [";
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
      if (i) out += ", ";
      out += pcup::to_string(hyperplanes[i]);
    }
    out += "]";
  }
  return out;
}

bool is_uncommon(const PComplex& x, const Vec& u, const std::set<DegreePair>& degrees) {
  for (const auto& [p, q] : degrees.empty() ? positive_levels(x) : degrees)
    if (uncommon_at(x, u, p, q)) return true;
  return false;
}

PointClass classify_point(const PComplex& x, const Vec& u, const std::set<DegreePair>& degrees) {
  if (u.size() != x.ambient_dim())
    throw Error(ErrorKind::dimension_mismatch, "covector of wrong dimension");
  PointClass out;
  for (const auto& h : unconvenient_hyperplanes(x, degrees))
    if (dot(h.normal, u) == 0) out.hyperplanes.push_back(h.normal);
  out.uncommon = is_uncommon(x, u, degrees);
  out.convenient = is_convenient(x, u, degrees).convenient;
  const bool on = !out.hyperplanes.empty();
  if (on && out.uncommon) out.kind = PointClass::Kind::mixed;
  else if (on) out.kind = PointClass::Kind::on_unconvenient_hyperplane;
  else if (out.uncommon) out.kind = PointClass::Kind::uncommon;
  else out.kind = out.convenient ? PointClass::Kind::convenient : PointClass::Kind::mixed;
  return out;
}

int theta_sign(const PComplex& x, const SpecialTriple& t, const Vec& phi) {
  Vec w = t.line;
  const Rat along = dot(phi, w);
  if (along == 0)
    throw Error(ErrorKind::phi_on_hyperplane,
                "phi vanishes on the line " + to_string(t.line) + " of the special triple");
  if (along < 0) w = -w;
  const auto a = complete_basis(x, t.delta, {w});
  const auto b = complete_basis(x, t.lambda, {w});
  std::vector<Vec> joint = a;
  joint.insert(joint.end(), b.begin() + 1, b.end());
  return orientation_in(x, t.delta, a) * orientation_in(x, t.lambda, b) *
         orientation_in(x, t.gamma, joint);
}

Cochain theta_cochain(const PComplex& x, const Cochain& rp, const Cochain& rq,
                      const SpecialTriple& t, const Vec& phi) {
  if (!(rp.ring() == rq.ring()))
    throw Error(ErrorKind::ring_mismatch, "cochains over different rings");
  Cochain out(rp.degree() + rq.degree() - 1, rp.ring());
  const int eps = theta_sign(x, t, phi);
  out.set(t.gamma, Rat(eps) * mul(rp[t.delta], rq[t.lambda]));
  return out;
}

WallCrossing wall_crossing(const PComplex& x, const Cochain& rp, const Cochain& rq,
                           const Vec& u, const Vec& v) {
  if (!is_cocycle(x, rp) || !is_cocycle(x, rq))
    throw Error(ErrorKind::not_a_cocycle, "wall crossing needs cocycles");
  const int p = rp.degree(), q = rq.degree();
  const std::set<DegreePair> level{{p, q}};
  for (const Vec* end : {&u, &v}) {
    const auto report = is_convenient(x, *end, level);
    if (!report.convenient) throw NotConvenient(report);
  }

  // Crossing points of the segment with D(X).
  const Vec step = v - u;
  std::map<Rat, std::vector<Vec>> crossings;
  for (const auto& h : discriminant(x)) {
    const Rat a = dot(h.normal, u), b = dot(h.normal, v);
    if (a == 0 || b == 0)
      throw Error(ErrorKind::bad_kappa, "segment endpoint on the discriminant hyperplane " +
                                            to_string(h.normal));
    if ((a > 0) == (b > 0)) continue;
    crossings[a / (a - b)].push_back(h.normal);
  }
  if (crossings.empty()) throw Error(ErrorKind::no_crossing, "segment does not cross D(X)");
  if (crossings.size() > 1)
    throw Error(ErrorKind::multiple_crossings,
                "segment crosses D(X) at " + std::to_string(crossings.size()) + " points");
  const auto& [tau, normals] = *crossings.begin();
  if (normals.size() > 1)
    throw Error(ErrorKind::bad_kappa, "crossing point lies on several discriminant hyperplanes");
  WallCrossing out;
  out.normal = normals.front();
  out.tau = tau;
  out.kappa = u + tau * step;

  for (const auto& g : unconvenient_hyperplanes(x, level))
    if (g.normal != out.normal && dot(g.normal, out.kappa) == 0)
      throw Error(ErrorKind::bad_kappa, "crossing point also lies on the unconvenient hyperplane " +
                                            to_string(g.normal));
  if (uncommon_at(x, out.kappa, p, q))
    throw Error(ErrorKind::bad_kappa, "crossing point is uncommon");
  const auto along = segment_convenience(x, u, v, level);
  if (along.whole_interval ||
      std::any_of(along.failures.begin(), along.failures.end(),
                  [&](const Rat& t) { return t != tau; }))
    throw Error(ErrorKind::bad_kappa, "segment leaves the convenient set away from the crossing");

  // Under the orientation and incidence conventions used here the sum of
  // theta coboundaries picks up a factor (-1)^p.
  const Vec phi = v - u;
  const Rat level_sign = p % 2 == 0 ? 1 : -1;
  out.delta = Cochain(p + q, rp.ring());
  for (const auto& t : special_triples(x, p, q)) {
    if (t.line != out.normal) continue;
    const Fan& fan = x.fan(t.gamma);
    if (!cones_meet(fan.cone(t.delta), fan.cone(t.lambda), project_to_cell(x, out.kappa, t.gamma)))
      continue;
    out.active.push_back(t);
    out.delta += level_sign * coboundary(x, theta_cochain(x, rp, rq, t, phi));
  }
  return out;
}

Cochain wall_crossing_delta(const PComplex& x, const Cochain& rp, const Cochain& rq,
                            const Vec& u, const Vec& v) {
  return wall_crossing(x, rp, rq, u, v).delta;
}

bool same_component(const PComplex& x, const Vec& u, const Vec& v) {
  for (const auto& h : discriminant(x)) {
    const int a = sign(dot(h.normal, u)), b = sign(dot(h.normal, v));
    if (a == 0 || b == 0 || a != b) return false;
  }
  return true;
}

}  // namespace pcup
