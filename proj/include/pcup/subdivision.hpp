#pragma once

// A fine complex X subdividing a coarse complex Y, and the pushforward of
// cochains from X to Y.

#include <optional>
#include <utility>
#include <vector>

#include "pcup/pcomplex.hpp"

namespace pcup {

struct SubdivisionMap {
  PComplex fine;
  PComplex coarse;
  std::vector<CellId> carrier;  // per fine cell: the smallest coarse cell containing it
  /// Per coarse cell: the fine cells of the same dimension inside it, with
  /// the sign of their orientation relative to the coarse cell.
  std::vector<std::vector<std::pair<CellId, int>>> pieces;
};

/// Throws Error(not_a_subdivision) naming a cell of X outside every cell of
/// Y, or a cell of Y not tiled by cells of X.
SubdivisionMap build_subdivision(const PComplex& x, const PComplex& y);

/// Whether the point lies in the (closed) cell.
bool cell_contains(const PComplex& x, CellId cell, const Vec& point);

/// res(r)(gamma) = signed sum of r over the cells of X inside gamma.
Cochain res(const Cochain& r, const SubdivisionMap& m);

struct Defect {
  Cochain defect;                   // res(r_p) cup res(r_q) - res(r_p cup r_q), on Y
  std::optional<Cochain> witness;   // w on Y with d w = defect, when one exists
};

/// Throws Error(not_simplicial | not_a_cocycle) or NotConvenient when v is not
/// convenient for both complexes at level (p, q).
Defect subdivision_defect(const Cochain& rp, const Cochain& rq, const Vec& v,
                       const SubdivisionMap& m);

}  // namespace pcup
