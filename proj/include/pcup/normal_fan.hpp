#pragma once

// Dual cones of the faces of a cell gamma, living in (V_gamma)^*. All data
// for one gamma is written in gamma's tangent-basis coordinates: a covector
// u on V_gamma is the vector (u(t_1), ..., u(t_m)), and a point w of gamma is
// the coordinate vector of w - p0, so pairing is the plain dot product.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pcup/linalg.hpp"
#include "pcup/pcomplex.hpp"

namespace pcup {

/// The dual cone delta^* of a face delta of gamma:
///   { u : u . t = 0 for t in V_delta,  u . (w - x_delta) <= 0 for w in gamma }.
/// Its relative interior is where every inequality is strict.
struct NormalCone {
  CellId carrier = 0;  // gamma
  CellId face = 0;     // delta
  std::size_t space_dim = 0;           // dim gamma
  std::vector<Vec> equalities;         // oriented tangent basis of delta, gamma coords
  std::vector<Vec> hull_basis;         // oriented basis of V_delta^perp
  std::vector<Vec> inequalities;       // one row per vertex of gamma not in delta
  Vec interior;                        // a point of the relative interior

  std::size_t dim() const noexcept { return hull_basis.size(); }
  bool contains(const Vec& u) const;
  bool contains_relint(const Vec& u) const;
};

struct Fan {
  CellId carrier = 0;
  std::vector<CellId> faces;             // faces of gamma, by (dim, id)
  std::map<CellId, NormalCone> cones;    // keyed by face
  std::vector<Vec> vertex_coords;        // coordinates of gamma's vertices (same order as Cell::vertices)
  std::map<CellId, Vec> facet_normals;   // outward, gamma coordinates

  const NormalCone& cone(CellId face) const;
};

/// Builds the normal fan of one cell. Used by build_complex; callers should
/// go through PComplex::fan().
Fan compute_fan(const PComplex& x, CellId gamma);

const NormalCone& dual_cone(const PComplex& x, CellId gamma, CellId delta);

/// Restriction of an ambient covector v to V_gamma in gamma's tangent
/// coordinates, i.e. (v . t_1, ..., v . t_m).
Vec project_to_cell(const PComplex& x, const Vec& v, CellId gamma);

/// Outward normal covector of a facet of gamma, in gamma coordinates.
Vec facet_normal(const PComplex& x, CellId gamma, CellId facet);

/// Local duality: a p-cochain on the faces of gamma becomes an (m-p)-chain
/// on the normal fan, keyed by face id, with r*(delta^*) = r(delta) under the
/// cone orientations of NormalCone::hull_basis.
Chain dualize_cochain(const PComplex& x, CellId gamma, const Cochain& r);

/// Boundary operator of the normal fan of gamma on chains keyed by face id
/// (a chain of degree k lives on the k-dimensional cones).
Chain fan_boundary(const PComplex& x, CellId gamma, const Chain& c);

/// Incidence of the cone facet^* in cone^*, where `facet` has one more
/// dimension than `face` and contains it (so facet^* is a facet of face^*).
int cone_incidence(const PComplex& x, CellId gamma, CellId face, CellId facet);

/// Whether (s + a) and b intersect, a and b cones of one fan.
bool cones_meet(const NormalCone& a, const NormalCone& b, const Vec& shift);

/// The closed interval of tau in [0, 1] for which (s0 + tau s1 + a) meets b,
/// or std::nullopt when there is none.
std::optional<std::pair<Rat, Rat>> meeting_interval(const NormalCone& a, const NormalCone& b,
                                                    const Vec& s0, const Vec& s1);

/// Sign s with (d r)^* = s * fan_boundary(r^*) for p-cochains r on the faces
/// of an m-dimensional cell. Fixed convention, see dualize_cochain.
int duality_sign(int p, int m);

}  // namespace pcup
