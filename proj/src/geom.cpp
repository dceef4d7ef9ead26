#include "pcup/geom.hpp"

#include <algorithm>

#include "pcup/normal_fan.hpp"

namespace pcup {

namespace {

Rat factorial(int n) {
  Rat out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Ring exterior_ring(const PComplex& x) {
  return Ring::exterior(static_cast<int>(x.ambient_dim()));
}

// Signed volume of a simplex in the tangent coordinates of `cell`.
Rat simplex_det(const PComplex& x, CellId cell, const std::vector<std::size_t>& s) {
  std::vector<Vec> cols;
  for (std::size_t k = 1; k < s.size(); ++k)
    cols.push_back(x.coords(cell, x.vertex(s[k]) - x.vertex(s[0])));
  return determinant(Mat::from_columns(cols, static_cast<std::size_t>(x.cell(cell).dim)));
}

// Covector on the ambient space restricting to `c` (cell coordinates) on V_cell.
Vec lift_covector(const PComplex& x, CellId cell, const Vec& c) {
  const auto& t = x.cell(cell).tangent;
  if (t.empty()) return zeros(x.ambient_dim());
  return solve_affine(Mat(t, x.ambient_dim()), c)->particular;
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate(const PComplex& x, CellId cell) {
  const Cell& c = x.cell(cell);
  if (c.dim == 0) return {{c.vertices.front()}};
  const std::size_t apex = c.orient.front();
  std::vector<std::vector<std::size_t>> out;
  for (const auto& [f, s] : c.facets) {
    const auto& fv = x.cell(f).vertices;
    if (std::binary_search(fv.begin(), fv.end(), apex)) continue;
    for (auto simplex : triangulate(x, f)) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

Rat relative_volume(const PComplex& x, CellId cell) {
  Rat total = 0;
  for (const auto& s : triangulate(x, cell)) total += abs(simplex_det(x, cell, s));
  return total / factorial(x.cell(cell).dim);
}

Rat cell_volume(const PComplex& x, CellId cell) {
  const Cell& c = x.cell(cell);
  if (static_cast<std::size_t>(c.dim) != x.ambient_dim())
    throw Error(ErrorKind::dimension_mismatch, "cell is not full-dimensional");
  return relative_volume(x, cell) * abs(determinant(Mat::from_columns(c.tangent, x.ambient_dim())));
}

ExtElement cell_multivector(const PComplex& x, CellId cell) {
  return relative_volume(x, cell) * wedge_all(x.cell(cell).tangent);
}

Cochain vol_cocycle(const PComplex& x, int q) {
  Cochain out(q, exterior_ring(x));
  const Ring ring = exterior_ring(x);
  for (CellId c : x.cells_of_dim(q))
    out.set(c, RingElement(ring, factorial(q) * cell_multivector(x, c)));
  return out;
}

bool pascal_by_coboundary(const PComplex& x, CellId cell) {
  const int k = x.cell(cell).dim;
  if (k == 0) return true;
  const Cochain d = coboundary(x, vol_cocycle(x, k - 1));
  return d[cell].is_zero();
}

bool pascal_by_normals(const PComplex& x, CellId cell) {
  const Cell& mu = x.cell(cell);
  const int k = mu.dim;
  if (k == 0) return true;
  const auto m = static_cast<std::size_t>(k);
  const Vec centre = x.point_coords(cell, x.barycenter(cell));
  Vec total = zeros(m);
  for (const auto& [f, s] : mu.facets) {
    const Vec outward = x.point_coords(cell, x.barycenter(f)) - centre;
    for (const auto& simplex : triangulate(x, f)) {
      // Generalized cross product of the simplex edges, as a covector.
      std::vector<Vec> cols;
      for (std::size_t j = 1; j < simplex.size(); ++j)
        cols.push_back(x.coords(cell, x.vertex(simplex[j]) - x.vertex(simplex[0])));
      Vec normal(m);
      for (std::size_t i = 0; i < m; ++i) {
        auto full = cols;
        full.push_back(unit(m, i));
        normal[i] = determinant(Mat::from_columns(full, m));
      }
      if (dot(normal, outward) < 0) normal = -normal;
      total = total + normal;
    }
  }
  return is_zero(total);
}

bool check_pascal(const PComplex& x) {
  for (CellId c = 0; c < x.size(); ++c)
    if (!pascal_by_coboundary(x, c) || !pascal_by_normals(x, c)) return false;
  return true;
}

bool in_R(const PComplex& x, const Cochain& r) {
  if (!(r.ring() == exterior_ring(x)))
    throw Error(ErrorKind::dimension_mismatch,
                "membership in R needs values in the exterior algebra of V, got " +
                    r.ring().to_string());
  if (!is_cocycle(x, r)) return false;
  for (const auto& [id, value] : r.values()) {
    const ExtElement top = wedge_all(x.cell(id).tangent);
    const auto& [blade, coeff] = *top.terms().begin();
    const Rat c = value.value().coeff(blade) / coeff;
    if (!(value.value() == c * top)) return false;
  }
  return true;
}

MinkowskiSum minkowski_sum_complex(std::size_t ambient_dim,
                                   const std::vector<std::vector<Vec>>& summands) {
  if (summands.empty()) throw Error(ErrorKind::dimension_mismatch, "no summands");
  for (const auto& s : summands) {
    if (s.empty()) throw Error(ErrorKind::invalid_cell, "empty summand");
    for (const auto& p : s)
      if (p.size() != ambient_dim)
        throw Error(ErrorKind::dimension_mismatch, "summand point of wrong dimension");
  }
  std::vector<Vec> sums{zeros(ambient_dim)};
  for (const auto& s : summands) {
    std::vector<Vec> next;
    for (const auto& a : sums)
      for (const auto& b : s) {
        Vec c = a + b;
        if (std::find(next.begin(), next.end(), c) == next.end()) next.push_back(std::move(c));
      }
    sums = std::move(next);
  }
  MinkowskiSum out{polytope_complex(ambient_dim, sums, true), summands, {}};
  const PComplex& x = out.complex;
  const CellId top = x.cells_of_dim(x.top_dim()).front();
  const Fan& fan = x.fan(top);
  for (CellId edge : x.cells_of_dim(1)) {
    const Vec dir = x.cell(edge).tangent.front();
    const Vec c = lift_covector(x, top, fan.cone(edge).interior);
    std::vector<SummandFace> faces;
    Vec total = zeros(ambient_dim);
    for (const auto& s : summands) {
      Rat best = dot(c, s.front());
      for (const auto& p : s) best = std::max(best, Rat(dot(c, p)));
      std::vector<std::size_t> argmax;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (dot(c, s[i]) == best) argmax.push_back(i);
      SummandFace face;
      auto lo = argmax.front(), hi = argmax.front();
      for (auto i : argmax) {
        if (!in_span(std::vector<Vec>{dir}, s[i] - s[lo], ambient_dim))
          throw Error(ErrorKind::degenerate_sum,
                      "summand face of edge " + std::to_string(edge) + " is not a segment");
        if (dot(dir, s[i]) < dot(dir, s[lo])) lo = i;
        if (dot(dir, s[i]) > dot(dir, s[hi])) hi = i;
      }
      if (s[lo] == s[hi]) {
        face.points = {lo};
        face.vector = zeros(ambient_dim);
      } else {
        face.points = {lo, hi};
        face.vector = s[hi] - s[lo];
      }
      total = total + face.vector;
      faces.push_back(std::move(face));
    }
    if (total != dir)
      throw Error(ErrorKind::degenerate_sum,
                  "summand faces do not add up to edge " + std::to_string(edge));
    out.labels.emplace(edge, std::move(faces));
  }
  return out;
}

Cochain summand_cochain(const MinkowskiSum& sum, std::size_t k) {
  const Ring ring = exterior_ring(sum.complex);
  Cochain out(1, ring);
  for (const auto& [edge, faces] : sum.labels)
    out.set(edge, RingElement(ring, ExtElement::vector(faces.at(k).vector)));
  return out;
}

Rat top_coefficient(const PComplex& x, const Cochain& r, CellId cell) {
  const std::size_t n = x.ambient_dim();
  const Cell& c = x.cell(cell);
  if (static_cast<std::size_t>(c.dim) != n)
    throw Error(ErrorKind::dimension_mismatch, "cell is not full-dimensional");
  Blade all = 0;
  for (std::size_t i = 0; i < n; ++i) all |= Blade(1) << i;
  const int orientation = det_sign(Mat::from_columns(c.tangent, n));
  return orientation * r[cell].value().coeff(all);
}

Rat mixed_volume(const std::vector<std::vector<Vec>>& summands, const Vec& v) {
  const std::size_t n = summands.size();
  if (v.size() != n)
    throw Error(ErrorKind::dimension_mismatch,
                "mixed volume of " + std::to_string(n) + " polytopes needs dimension " +
                    std::to_string(n));
  const MinkowskiSum sum = minkowski_sum_complex(n, summands);
  const PComplex& x = sum.complex;
  if (x.top_dim() != static_cast<int>(n)) return 0;
  Cochain product = summand_cochain(sum, 0);
  for (std::size_t k = 1; k < n; ++k) product = cup(x, product, summand_cochain(sum, k), v);
  return top_coefficient(x, product, x.cells_of_dim(x.top_dim()).front()) /
         factorial(static_cast<int>(n));
}

Rat mixed_volume(const std::vector<std::vector<Vec>>& summands, std::uint64_t seed) {
  const std::size_t n = summands.size();
  for (const auto& s : summands)
    for (const auto& p : s)
      if (p.size() != n) throw Error(ErrorKind::dimension_mismatch, "summand of wrong dimension");
  const MinkowskiSum sum = minkowski_sum_complex(n, summands);
  return mixed_volume(summands, sample_convenient(sum.complex, seed));
}

Rat volume_by_cup(const PComplex& x, const Vec& v) {
  const int n = static_cast<int>(x.ambient_dim());
  if (x.top_dim() != n) throw Error(ErrorKind::dimension_mismatch, "complex is not full-dimensional");
  const Cochain vol1 = vol_cocycle(x, 1);
  Cochain product = vol1;
  for (int k = 1; k < n; ++k) product = cup(x, product, vol1, v);
  return top_coefficient(x, product, x.cells_of_dim(n).front()) / factorial(n);
}

}  // namespace pcup
