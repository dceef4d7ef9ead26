#include "pcup/subdivision.hpp"

#include "pcup/cup.hpp"
#include "pcup/geom.hpp"
#include "pcup/normal_fan.hpp"

namespace pcup {

namespace {

Error not_a_subdivision(const std::string& what) {
  return Error(ErrorKind::not_a_subdivision, what);
}

}  // namespace

bool cell_contains(const PComplex& x, CellId cell, const Vec& point) {
  const Cell& c = x.cell(cell);
  const Vec offset = point - x.vertex(c.orient.front());
  if (!c.frame.contains(offset) && !(c.dim == 0 && is_zero(offset))) return false;
  if (c.dim == 0) return is_zero(offset);
  const Vec local = x.coords(cell, offset);
  for (const auto& [f, s] : c.facets) {
    const Vec anchor = x.point_coords(cell, x.vertex(x.cell(f).orient.front()));
    if (dot(facet_normal(x, cell, f), local - anchor) > 0) return false;
  }
  return true;
}

SubdivisionMap build_subdivision(const PComplex& x, const PComplex& y) {
  if (x.ambient_dim() != y.ambient_dim())
    throw not_a_subdivision("complexes live in spaces of different dimension");
  SubdivisionMap m{x, y, {}, std::vector<std::vector<std::pair<CellId, int>>>(y.size())};
  for (CellId d = 0; d < x.size(); ++d) {
    const Cell& cell = x.cell(d);
    std::optional<CellId> best;
    for (CellId g = 0; g < y.size(); ++g) {
      if (y.cell(g).dim < cell.dim) continue;
      if (best && y.cell(g).dim >= y.cell(*best).dim) continue;
      bool inside = true;
      for (auto v : cell.vertices)
        if (!cell_contains(y, g, x.vertex(v))) {
          inside = false;
          break;
        }
      if (inside) best = g;
    }
    if (!best) throw not_a_subdivision("cell " + std::to_string(d) + " of the fine complex lies in no coarse cell");
    m.carrier.push_back(*best);
    const Cell& host = y.cell(*best);
    if (host.dim != cell.dim) continue;
    std::vector<Vec> cols;
    for (const auto& t : cell.tangent) cols.push_back(y.coords(*best, t));
    const int s = cell.dim == 0 ? 1
                                : det_sign(Mat::from_columns(cols, static_cast<std::size_t>(cell.dim)));
    m.pieces[*best].push_back({d, s});
  }
  for (CellId g = 0; g < y.size(); ++g) {
    Rat covered = 0;
    for (const auto& [d, s] : m.pieces[g]) {
      const Cell& cell = x.cell(d);
      std::vector<Vec> cols;
      for (const auto& t : cell.tangent) cols.push_back(y.coords(g, t));
      Rat scale = cell.dim == 0 ? Rat(1)
                                : determinant(Mat::from_columns(cols, static_cast<std::size_t>(cell.dim)));
      if (scale < 0) scale = -scale;
      covered += relative_volume(x, d) * scale;
    }
    if (covered != relative_volume(y, g))
      throw not_a_subdivision("cell " + std::to_string(g) + " of the coarse complex is not tiled by fine cells");
  }
  return m;
}

Cochain res(const Cochain& r, const SubdivisionMap& m) {
  Cochain out(r.degree(), r.ring());
  for (CellId g : m.coarse.cells_of_dim(r.degree())) {
    RingElement value = RingElement::zero(r.ring());
    for (const auto& [d, s] : m.pieces[g]) value += Rat(s) * r[d];
    out.set(g, value);
  }
  return out;
}

Defect subdivision_defect(const Cochain& rp, const Cochain& rq, const Vec& v,
                       const SubdivisionMap& m) {
  if (!m.fine.is_simplicial())
    throw Error(ErrorKind::not_simplicial, "the fine complex is not simplicial");
  if (!is_cocycle(m.fine, rp) || !is_cocycle(m.fine, rq))
    throw Error(ErrorKind::not_a_cocycle, "the defect is defined for cocycles");
  const std::set<DegreePair> level{{rp.degree(), rq.degree()}};
  for (const PComplex* c : {&m.fine, &m.coarse}) {
    const auto report = is_convenient(*c, v, level);
    if (!report.convenient) throw NotConvenient(report);
  }
  Defect out;
  out.defect = cup(m.coarse, res(rp, m), res(rq, m), v) - res(cup(m.fine, rp, rq, v), m);
  out.witness = is_coboundary(m.coarse, out.defect);
  return out;
}

}  // namespace pcup
