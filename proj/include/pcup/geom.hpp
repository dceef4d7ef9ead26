#pragma once

// Volume cocycles and their products: multivector volumes of cells, the
// Pascal equations, the subring of "geometric" cocycles, and mixed volumes
// of lattice polytopes via Minkowski sums.

#include <cstdint>
#include <map>
#include <vector>

#include "pcup/cup.hpp"
#include "pcup/exterior.hpp"
#include "pcup/pcomplex.hpp"

namespace pcup {

/// Fan triangulation of a cell from its first orientation vertex, recursing
/// through the facets that miss it. Each simplex is a list of vertex ids.
std::vector<std::vector<std::size_t>> triangulate(const PComplex& x, CellId cell);

/// Volume of a cell relative to its own tangent basis, so that the simplex
/// spanned by the basis has volume 1/dim!.
Rat relative_volume(const PComplex& x, CellId cell);

/// Euclidean volume of a full-dimensional cell.
Rat cell_volume(const PComplex& x, CellId cell);

/// beta_cell: the grade-dim multivector with integral of w over the cell
/// equal to w(beta), signed by the cell's orientation.
ExtElement cell_multivector(const PComplex& x, CellId cell);

/// vol_q(delta) = q! beta_delta, valued in the exterior algebra of V.
Cochain vol_cocycle(const PComplex& x, int q);

/// Pascal equations on every cell, checked twice: through d(vol_{k-1}) and
/// through a direct sum of outward facet normals weighted by facet volume.
/// Returns false when either test fails.
bool check_pascal(const PComplex& x);
bool pascal_by_coboundary(const PComplex& x, CellId cell);
bool pascal_by_normals(const PComplex& x, CellId cell);

/// Closed, and r(delta) lies in the top exterior power of V_delta for each
/// cell. Throws Error(dimension_mismatch) for a ring other than Lambda^* V.
bool in_R(const PComplex& x, const Cochain& r);

/// One face of a summand: a vertex (empty vector) or an edge with its
/// vector oriented along the sum edge.
struct SummandFace {
  std::vector<std::size_t> points;  // indices into the summand's point list
  Vec vector;                       // zero vector for a vertex
  bool is_edge() const { return points.size() == 2; }
};

struct MinkowskiSum {
  PComplex complex;
  std::vector<std::vector<Vec>> summands;
  std::map<CellId, std::vector<SummandFace>> labels;  // per edge, one face per summand
};

/// Face complex of the sum with each edge decomposed into summand faces.
/// Throws Error(degenerate_sum) when a decomposition is not unique.
MinkowskiSum minkowski_sum_complex(std::size_t ambient_dim,
                                   const std::vector<std::vector<Vec>>& summands);

/// The 1-cochain lambda -> lambda_k of the k-th summand (zero when lambda_k is
/// a vertex), valued in Lambda^* V.
Cochain summand_cochain(const MinkowskiSum& sum, std::size_t k);

/// Mixed volume of n polytopes in dimension n, normalized so that
/// V(P, ..., P) = vol(P). Throws Error(dimension_mismatch) or NotConvenient.
Rat mixed_volume(const std::vector<std::vector<Vec>>& summands, const Vec& v);
/// Same, with a sampled convenient parameter.
Rat mixed_volume(const std::vector<std::vector<Vec>>& summands, std::uint64_t seed = 1);

/// Volume of the top cell of a full-dimensional polytope complex read off
/// from (vol_1)^n computed with parameter v.
Rat volume_by_cup(const PComplex& x, const Vec& v);

/// Coefficient of e_1 ^ ... ^ e_n on the top cell, corrected to the positive
/// orientation of V.
Rat top_coefficient(const PComplex& x, const Cochain& r, CellId cell);

}  // namespace pcup
