#include "pcup/pcomplex.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pcup/errors.hpp"
#include "pcup/lp.hpp"
#include "pcup/normal_fan.hpp"

namespace pcup {

namespace {

std::string describe(const VertexSet& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::string describe_cell(CellId id, const VertexSet& vs) {
  return "cell " + std::to_string(id) + " " + describe(vs);
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Greedy choice of affinely independent vertices, in id order.
std::vector<std::size_t> greedy_frame(const std::vector<Vec>& points, const VertexSet& ids) {
  std::vector<std::size_t> chosen{ids.front()};
  std::vector<Vec> diffs;
  const std::size_t n = points[ids.front()].size();
  for (std::size_t k = 1; k < ids.size(); ++k) {
    diffs.push_back(points[ids[k]] - points[ids.front()]);
    if (rank(diffs, n) == diffs.size()) {
      chosen.push_back(ids[k]);
    } else {
      diffs.pop_back();
    }
  }
  return chosen;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool boxes_disjoint(const std::vector<Vec>& pts, const VertexSet& a, const VertexSet& b) {
  const std::size_t n = pts[a.front()].size();
  for (std::size_t k = 0; k < n; ++k) {
    Rat amin = pts[a[0]][k], amax = amin, bmin = pts[b[0]][k], bmax = bmin;
    for (auto i : a) {
      amin = std::min(amin, pts[i][k]);
      amax = std::max(amax, pts[i][k]);
    }
    for (auto i : b) {
      bmin = std::min(bmin, pts[i][k]);
      bmax = std::max(bmax, pts[i][k]);
    }
    if (amax < bmin || bmax < amin) return true;
  }
  return false;
}

// True when conv(a) and conv(b) meet somewhere outside conv(common).
bool meets_outside(const std::vector<Vec>& pts, const VertexSet& a, const VertexSet& b,
                   const VertexSet& common) {
  const std::size_t n = pts[a.front()].size();
  const std::size_t na = a.size(), nb = b.size();
  lp::Problem lp(na + nb);
  Vec sum_a(na + nb, Rat(0)), sum_b(na + nb, Rat(0));
  for (std::size_t i = 0; i < na; ++i) sum_a[i] = 1;
  for (std::size_t j = 0; j < nb; ++j) sum_b[na + j] = 1;
  lp.add(sum_a, lp::Relation::eq, 1);
  lp.add(sum_b, lp::Relation::eq, 1);
  for (std::size_t k = 0; k < n; ++k) {
    Vec row(na + nb, Rat(0));
    for (std::size_t i = 0; i < na; ++i) row[i] = pts[a[i]][k];
    for (std::size_t j = 0; j < nb; ++j) row[na + j] = -pts[b[j]][k];
    lp.add(row, lp::Relation::eq, 0);
  }
  Vec objective(na + nb, Rat(0));
  for (std::size_t i = 0; i < na; ++i)
    if (!std::binary_search(common.begin(), common.end(), a[i])) objective[i] = 1;
  const auto res = lp::maximize(lp, objective);
  if (res.status == lp::Status::infeasible) return false;
  return res.value > 0;
}

}  // namespace

std::vector<VertexSet> enumerate_facets(const std::vector<Vec>& points, const VertexSet& ids) {
  if (ids.size() < 2) return {};
  const std::size_t n = points[ids.front()].size();
  const auto frame_ids = greedy_frame(points, ids);
  std::vector<Vec> basis;
  for (std::size_t k = 1; k < frame_ids.size(); ++k)
    basis.push_back(points[frame_ids[k]] - points[frame_ids[0]]);
  const std::size_t d = basis.size();
  if (d == 0) return {};
  const BasisCoordinates frame(basis, n);
  std::vector<Vec> c;
  c.reserve(ids.size());
  for (auto i : ids) c.push_back(frame.coords(points[i] - points[frame_ids[0]]));

  std::set<VertexSet> found;
  for_each_combination(ids.size(), d, [&](const std::vector<std::size_t>& pick) {
    std::vector<Vec> rows;
    for (std::size_t k = 1; k < pick.size(); ++k) rows.push_back(c[pick[k]] - c[pick[0]]);
    std::vector<Vec> normal =
        rows.empty() ? std::vector<Vec>{unit(d, 0)} : nullspace(Mat(rows, d));
    if (normal.size() != 1) return;
    int side = 0;
    VertexSet on;
    for (std::size_t w = 0; w < ids.size(); ++w) {
      const int s = sign(dot(normal[0], c[w] - c[pick[0]]));
      if (s == 0) {
        on.push_back(ids[w]);
      } else if (side == 0) {
        side = s;
      } else if (side != s) {
        return;
      }
    }
    found.insert(on);
  });
  return {found.begin(), found.end()};
}

const std::vector<CellId>& PComplex::cells_of_dim(int d) const {
  static const std::vector<CellId> empty;
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return empty;
  return by_dim_[static_cast<std::size_t>(d)];
}

std::optional<CellId> PComplex::find(const VertexSet& vertices) const {
  auto it = index_.find(vertices);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PComplex::is_face(CellId face, CellId cell_id) const {
  const auto& f = cells_.at(cell_id).faces;
  return std::find(f.begin(), f.end(), face) != f.end();
}

int PComplex::incidence(CellId cell_id, CellId facet) const {
  for (const auto& [f, s] : cells_.at(cell_id).facets)
    if (f == facet) return s;
  throw Error(ErrorKind::invalid_cell, "cell " + std::to_string(facet) +
                                           " is not a facet of cell " + std::to_string(cell_id));
}

Vec PComplex::coords(CellId id, const Vec& v) const { return cells_.at(id).frame.coords(v); }

Vec PComplex::point_coords(CellId id, const Vec& p) const {
  const Cell& c = cells_.at(id);
  return c.frame.coords(p - vertices_[c.orient.front()]);
}

Vec PComplex::barycenter(CellId id) const {
  const Cell& c = cells_.at(id);
  Vec b = zeros(dim_);
  for (auto v : c.vertices) b = b + vertices_[v];
  return Rat(1, c.vertices.size()) * b;
}

int PComplex::relative_orientation(CellId id, std::span<const std::size_t> tuple) const {
  const Cell& c = cells_.at(id);
  if (tuple.size() != static_cast<std::size_t>(c.dim) + 1)
    throw Error(ErrorKind::invalid_cell, "orientation tuple of wrong length for " +
                                             describe_cell(id, c.vertices));
  std::vector<Vec> cols;
  for (std::size_t k = 1; k < tuple.size(); ++k)
    cols.push_back(c.frame.coords(vertices_.at(tuple[k]) - vertices_.at(tuple[0])));
  const int s = c.dim == 0 ? 1 : det_sign(Mat::from_columns(cols, c.dim));
  if (s == 0)
    throw Error(ErrorKind::invalid_cell, "degenerate orientation tuple for " +
                                             describe_cell(id, c.vertices));
  return s;
}

bool PComplex::is_simplicial() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) {
    return c.vertices.size() == static_cast<std::size_t>(c.dim) + 1;
  });
}

const Fan& PComplex::fan(CellId id) const { return fans_->at(id); }

PComplex build_complex(std::size_t ambient_dim, std::vector<Vec> vertices,
                       std::vector<CellSpec> specs) {
  PComplex x;
  x.dim_ = ambient_dim;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].size() != ambient_dim)
      throw Error(ErrorKind::invalid_cell, "vertex " + std::to_string(i) + " has dimension " +
                                               std::to_string(vertices[i].size()));
    for (std::size_t j = 0; j < i; ++j)
      if (vertices[i] == vertices[j])
        throw Error(ErrorKind::invalid_cell, "vertices " + std::to_string(j) + " and " +
                                                 std::to_string(i) + " coincide");
  }
  x.vertices_ = std::move(vertices);

  for (std::size_t id = 0; id < specs.size(); ++id) {
    auto& spec = specs[id];
    Cell c;
    c.vertices = spec.vertices;
    std::sort(c.vertices.begin(), c.vertices.end());
    c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
    if (c.vertices.empty() || c.vertices.size() != spec.vertices.size())
      throw Error(ErrorKind::invalid_cell, "cell " + std::to_string(id) +
                                               " has an empty or repeated vertex list");
    for (auto v : c.vertices)
      if (v >= x.vertices_.size())
        throw Error(ErrorKind::invalid_cell, "cell " + std::to_string(id) +
                                                 " references unknown vertex " + std::to_string(v));
    const auto frame_ids = greedy_frame(x.vertices_, c.vertices);
    c.dim = static_cast<int>(frame_ids.size()) - 1;
    if (spec.orient.empty()) {
      c.orient = frame_ids;
    } else {
      c.orient = spec.orient;
      if (c.orient.size() != frame_ids.size())
        throw Error(ErrorKind::invalid_cell, "orientation tuple of " +
                                                 describe_cell(id, c.vertices) + " must have " +
                                                 std::to_string(frame_ids.size()) + " entries");
      for (auto v : c.orient)
        if (!std::binary_search(c.vertices.begin(), c.vertices.end(), v))
          throw Error(ErrorKind::invalid_cell, "orientation vertex " + std::to_string(v) +
                                                   " is not a vertex of " +
                                                   describe_cell(id, c.vertices));
    }
    for (std::size_t k = 1; k < c.orient.size(); ++k)
      c.tangent.push_back(x.vertices_[c.orient[k]] - x.vertices_[c.orient[0]]);
    if (rank(c.tangent, ambient_dim) != c.tangent.size())
      throw Error(ErrorKind::invalid_cell, "orientation tuple of " +
                                               describe_cell(id, c.vertices) +
                                               " is not affinely independent");
    c.frame = BasisCoordinates(c.tangent, ambient_dim);
    if (x.index_.count(c.vertices))
      throw Error(ErrorKind::invalid_cell, describe_cell(id, c.vertices) + " duplicates cell " +
                                               std::to_string(x.index_[c.vertices]));
    x.index_[c.vertices] = id;
    x.top_dim_ = std::max(x.top_dim_, c.dim);
    x.cells_.push_back(std::move(c));
  }
  x.by_dim_.assign(static_cast<std::size_t>(x.top_dim_ + 1), {});
  for (CellId id = 0; id < x.cells_.size(); ++id)
    x.by_dim_[static_cast<std::size_t>(x.cells_[id].dim)].push_back(id);

  // Extreme vertices and face closure.
  for (CellId id = 0; id < x.cells_.size(); ++id) {
    Cell& c = x.cells_[id];
    if (c.dim == 0) continue;
    const auto facet_sets = enumerate_facets(x.vertices_, c.vertices);
    for (auto v : c.vertices) {
      VertexSet meet = c.vertices;
      for (const auto& f : facet_sets)
        if (std::binary_search(f.begin(), f.end(), v)) meet = intersect(meet, f);
      if (meet != VertexSet{v})
        throw Error(ErrorKind::redundant_vertex, "vertex " + std::to_string(v) + " of " +
                                                     describe_cell(id, c.vertices) +
                                                     " is not an extreme point");
    }
    for (const auto& f : facet_sets) {
      auto fid = x.find(f);
      if (!fid)
        throw Error(ErrorKind::not_a_face_closure, "facet " + describe(f) + " of " +
                                                       describe_cell(id, c.vertices) +
                                                       " is missing from the cell table");
      c.facets.emplace_back(*fid, 0);
      x.cells_[*fid].cofacets.push_back(id);
    }
  }
  for (int d = 0; d <= x.top_dim_; ++d) {
    for (CellId id : x.by_dim_[static_cast<std::size_t>(d)]) {
      Cell& c = x.cells_[id];
      std::set<CellId> faces{id};
      for (const auto& [f, s] : c.facets)
        faces.insert(x.cells_[f].faces.begin(), x.cells_[f].faces.end());
      c.faces.assign(faces.begin(), faces.end());
      std::stable_sort(c.faces.begin(), c.faces.end(), [&](CellId a, CellId b) {
        return x.cells_[a].dim < x.cells_[b].dim;
      });
    }
  }

  // Incidence numbers: sign of det(nu | B_facet) in the cell's basis.
  for (CellId id = 0; id < x.cells_.size(); ++id) {
    Cell& c = x.cells_[id];
    const Vec bary = x.barycenter(id);
    for (auto& [f, s] : c.facets) {
      std::vector<Vec> cols{c.frame.coords(x.barycenter(f) - bary)};
      for (const auto& t : x.cells_[f].tangent) cols.push_back(c.frame.coords(t));
      s = det_sign(Mat::from_columns(cols, static_cast<std::size_t>(c.dim)));
    }
  }

  // Every pairwise intersection must be a common face.
  for (CellId i = 0; i < x.cells_.size(); ++i) {
    for (CellId j = i + 1; j < x.cells_.size(); ++j) {
      const Cell& a = x.cells_[i];
      const Cell& b = x.cells_[j];
      if (a.dim == 0 && b.dim == 0) continue;
      const VertexSet common = intersect(a.vertices, b.vertices);
      auto fail = [&] {
        throw Error(ErrorKind::bad_intersection,
                    describe_cell(i, a.vertices) + " and " + describe_cell(j, b.vertices) +
                        " meet outside a common face");
      };
      if (!common.empty()) {
        auto cid = x.find(common);
        if (!cid || !x.is_face(*cid, i) || !x.is_face(*cid, j)) fail();
        if (common == a.vertices || common == b.vertices) continue;
      } else if (boxes_disjoint(x.vertices_, a.vertices, b.vertices)) {
        continue;
      }
      if (meets_outside(x.vertices_, a.vertices, b.vertices, common)) fail();
    }
  }

  auto fans = std::make_shared<std::vector<Fan>>();
  fans->reserve(x.cells_.size());
  for (CellId id = 0; id < x.cells_.size(); ++id) fans->push_back(compute_fan(x, id));
  x.fans_ = std::move(fans);
  return x;
}

PComplex polytope_complex(std::size_t ambient_dim, const std::vector<Vec>& input,
                          bool drop_interior) {
  std::vector<Vec> points;
  for (const auto& p : input) {
    if (p.size() != ambient_dim)
      throw Error(ErrorKind::dimension_mismatch, "polytope point of wrong dimension");
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
  }
  if (points.empty()) throw Error(ErrorKind::invalid_cell, "empty polytope");
  VertexSet all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::vector<Vec> extreme;
  if (points.size() == 1) {
    extreme = points;
  } else {
    const auto facets = enumerate_facets(points, all);
    for (auto v : all) {
      VertexSet meet = all;
      for (const auto& f : facets)
        if (std::binary_search(f.begin(), f.end(), v)) meet = intersect(meet, f);
      if (meet == VertexSet{v}) extreme.push_back(points[v]);
      else if (!drop_interior)
        throw Error(ErrorKind::redundant_vertex, "point " + to_string(points[v]) +
                                                     " is not an extreme point");
    }
  }
  VertexSet top(extreme.size());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;

  std::set<VertexSet> faces{top};
  std::vector<VertexSet> queue{top};
  while (!queue.empty()) {
    VertexSet f = queue.back();
    queue.pop_back();
    std::vector<VertexSet> sub = f.size() == 1 ? std::vector<VertexSet>{}
                                               : enumerate_facets(extreme, f);
    for (auto& s : sub)
      if (faces.insert(s).second) queue.push_back(s);
  }
  std::vector<VertexSet> ordered(faces.begin(), faces.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() < b.size();
  });
  std::vector<CellSpec> specs;
  for (const auto& f : ordered) specs.push_back({f, greedy_frame(extreme, f)});
  // Full-dimensional top cell: orient it positively.
  CellSpec& top_spec = specs.back();
  if (top_spec.orient.size() == ambient_dim + 1 && ambient_dim > 0) {
    std::vector<Vec> cols;
    for (std::size_t k = 1; k < top_spec.orient.size(); ++k)
      cols.push_back(extreme[top_spec.orient[k]] - extreme[top_spec.orient[0]]);
    if (det_sign(Mat::from_columns(cols, ambient_dim)) < 0)
      std::swap(top_spec.orient[0], top_spec.orient[1]);
  }
  return build_complex(ambient_dim, std::move(extreme), std::move(specs));
}

PComplex simplicial_complex(std::size_t ambient_dim, std::vector<Vec> points,
                            const std::vector<std::vector<std::size_t>>& simplices) {
  std::set<VertexSet> faces;
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.size() > 30) throw Error(ErrorKind::invalid_cell, "simplex with too many vertices");
    for (unsigned long mask = 1; mask < (1ul << s.size()); ++mask) {
      VertexSet f;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (mask >> k & 1) f.push_back(s[k]);
      faces.insert(std::move(f));
    }
  }
  std::vector<VertexSet> ordered(faces.begin(), faces.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() < b.size();
  });
  std::vector<CellSpec> specs;
  for (auto& f : ordered) specs.push_back({std::move(f), {}});
  return build_complex(ambient_dim, std::move(points), std::move(specs));
}

// ---------------------------------------------------------------------------

template <class Tag>
void validate(const PComplex& x, const CellValues<Tag>& c) {
  for (const auto& [id, v] : c.values()) {
    if (id >= x.size())
      throw Error(ErrorKind::invalid_cell, "cochain references unknown cell " + std::to_string(id));
    if (x.cell(id).dim != c.degree())
      throw Error(ErrorKind::invalid_cell, "cell " + std::to_string(id) + " has dimension " +
                                               std::to_string(x.cell(id).dim) +
                                               ", expected " + std::to_string(c.degree()));
  }
}

template void validate(const PComplex&, const CellValues<CochainTag>&);
template void validate(const PComplex&, const CellValues<ChainTag>&);

RingElement evaluate(const PComplex& x, const Cochain& r, CellId cell,
                     std::span<const std::size_t> tuple) {
  return Rat(x.relative_orientation(cell, tuple)) * r[cell];
}

Cochain coboundary(const PComplex& x, const Cochain& r) {
  Cochain out(r.degree() + 1, r.ring());
  for (const auto& [delta, value] : r.values())
    for (CellId gamma : x.cell(delta).cofacets)
      out.add(gamma, Rat(x.incidence(gamma, delta)) * value);
  return out;
}

Chain boundary(const PComplex& x, const Chain& c) {
  Chain out(c.degree() - 1, c.ring());
  for (const auto& [gamma, value] : c.values())
    for (const auto& [delta, s] : x.cell(gamma).facets) out.add(delta, Rat(s) * value);
  return out;
}

Mat coboundary_matrix(const PComplex& x, int p) {
  const auto& rows = x.cells_of_dim(p + 1);
  const auto& cols = x.cells_of_dim(p);
  Mat m(rows.size(), cols.size());
  std::map<CellId, std::size_t> col_index;
  for (std::size_t j = 0; j < cols.size(); ++j) col_index[cols[j]] = j;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [f, s] : x.cell(rows[i]).facets) m(i, col_index.at(f)) = s;
  return m;
}

std::size_t cohomology_rank(const PComplex& x, int p) {
  const std::size_t cells = x.cells_of_dim(p).size();
  if (cells == 0) return 0;
  const std::size_t out_rank = rank(coboundary_matrix(x, p));
  const std::size_t in_rank = p > 0 ? rank(coboundary_matrix(x, p - 1)) : 0;
  return cells - out_rank - in_rank;
}

bool is_cocycle(const PComplex& x, const Cochain& r) { return coboundary(x, r).is_zero(); }

std::optional<Cochain> is_coboundary(const PComplex& x, const Cochain& r) {
  const int p = r.degree();
  Cochain witness(p - 1, r.ring());
  if (r.is_zero()) return witness;
  if (p <= 0) return std::nullopt;
  const Mat d = coboundary_matrix(x, p - 1);
  const auto& rows = x.cells_of_dim(p);
  const auto& cols = x.cells_of_dim(p - 1);
  std::set<Blade> blades;
  for (const auto& [id, v] : r.values())
    for (const auto& [b, c] : v.value().terms()) blades.insert(b);
  for (Blade b : blades) {
    Vec rhs(rows.size(), Rat(0));
    for (std::size_t i = 0; i < rows.size(); ++i) rhs[i] = r[rows[i]].value().coeff(b);
    auto sol = solve_affine(d, rhs);
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (sol->particular[j] != 0)
        witness.add(cols[j], RingElement(r.ring(), ExtElement::blade(b, sol->particular[j])));
  }
  return witness;
}

Cochain unit_cochain(const PComplex& x, Ring ring) {
  Cochain out(0, ring);
  for (CellId v : x.cells_of_dim(0)) out.set(v, RingElement::one(ring));
  return out;
}

}  // namespace pcup
