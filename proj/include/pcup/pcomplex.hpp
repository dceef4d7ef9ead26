#pragma once

// Polyhedral complexes with exact rational vertices, their oriented cells,
// incidence numbers, and (co)chains with coefficients in a Ring.
//
// Orientation convention: a d-cell stores an ordered tuple of d+1 affinely
// independent vertices; its tangent basis is (p1 - p0, ..., pd - p0). The
// incidence of a facet delta in gamma is the sign of det(nu | B_delta) in
// gamma's basis, nu pointing out of gamma across delta. For a segment [a,b]
// this gives d(r)[a,b] = r(b) - r(a).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcup/errors.hpp"
#include "pcup/exterior.hpp"
#include "pcup/linalg.hpp"

namespace pcup {

using CellId = std::size_t;
using VertexSet = std::vector<std::size_t>;  // sorted vertex ids

struct Fan;

struct CellSpec {
  VertexSet vertices;
  std::vector<std::size_t> orient;  // empty: pick a canonical tuple
};

struct Cell {
  VertexSet vertices;
  int dim = 0;
  std::vector<std::size_t> orient;
  std::vector<Vec> tangent;  // oriented basis of V_cell, in ambient coordinates
  BasisCoordinates frame;    // coordinates with respect to `tangent`
  std::vector<std::pair<CellId, int>> facets;  // (facet, incidence sign)
  std::vector<CellId> cofacets;
  std::vector<CellId> faces;  // every face including the cell itself, by (dim, id)
};

class PComplex {
 public:
  std::size_t ambient_dim() const noexcept { return dim_; }
  /// Largest cell dimension (-1 for an empty complex).
  int top_dim() const noexcept { return top_dim_; }
  std::size_t size() const noexcept { return cells_.size(); }

  const std::vector<Vec>& vertices() const noexcept { return vertices_; }
  const Vec& vertex(std::size_t i) const { return vertices_.at(i); }
  const Cell& cell(CellId id) const { return cells_.at(id); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  const std::vector<CellId>& cells_of_dim(int d) const;
  std::optional<CellId> find(const VertexSet& vertices) const;
  bool is_face(CellId face, CellId cell) const;

  int incidence(CellId cell, CellId facet) const;
  /// +1/-1 when `tuple` orders affinely independent vertices of the cell in
  /// the same/opposite orientation as the stored one.
  int relative_orientation(CellId id, std::span<const std::size_t> tuple) const;
  /// Coordinates of a vector of V_cell in the cell's tangent basis.
  Vec coords(CellId id, const Vec& v) const;
  /// Coordinates of a point of aff(cell) relative to the cell's first
  /// orientation vertex.
  Vec point_coords(CellId id, const Vec& p) const;
  Vec barycenter(CellId id) const;

  bool is_simplicial() const;
  const Fan& fan(CellId id) const;

 private:
  friend PComplex build_complex(std::size_t, std::vector<Vec>, std::vector<CellSpec>);

  std::size_t dim_ = 0;
  int top_dim_ = -1;
  std::vector<Vec> vertices_;
  std::vector<Cell> cells_;
  std::vector<std::vector<CellId>> by_dim_;
  std::map<VertexSet, CellId> index_;
  std::shared_ptr<const std::vector<Fan>> fans_;
};

/// Validates both complex axioms and builds the face lattice. Throws
/// Error(not_a_face_closure | bad_intersection | redundant_vertex |
/// invalid_cell) naming the offending cells.
PComplex build_complex(std::size_t ambient_dim, std::vector<Vec> vertices,
                       std::vector<CellSpec> cells);

/// All faces of conv(points) as a complex: every point must be extreme
/// unless `drop_interior` is set, in which case non-extreme points are
/// discarded. The top cell is positively oriented in the ambient space when
/// it is full-dimensional.
PComplex polytope_complex(std::size_t ambient_dim, const std::vector<Vec>& points,
                          bool drop_interior = false);

/// Closure of a list of simplices (vertex id lists) as a complex, with
/// canonical orientations.
PComplex simplicial_complex(std::size_t ambient_dim, std::vector<Vec> points,
                            const std::vector<std::vector<std::size_t>>& simplices);

/// Facet vertex sets of conv(points[ids]) by brute-force supporting
/// hyperplane enumeration. `frame` gives coordinates of differences.
std::vector<VertexSet> enumerate_facets(const std::vector<Vec>& points,
                                        const VertexSet& ids);

// ---------------------------------------------------------------------------
// Chains and cochains

struct CochainTag {};
struct ChainTag {};

/// Values of an odd function on oriented cells of one dimension, stored
/// against each cell's stored orientation. Absent cells carry zero.
template <class Tag>
class CellValues {
 public:
  CellValues() = default;
  CellValues(int degree, Ring ring) : degree_(degree), ring_(ring) {}

  int degree() const noexcept { return degree_; }
  const Ring& ring() const noexcept { return ring_; }
  const std::map<CellId, RingElement>& values() const noexcept { return values_; }
  bool is_zero() const noexcept { return values_.empty(); }

  RingElement operator[](CellId id) const {
    auto it = values_.find(id);
    return it == values_.end() ? RingElement::zero(ring_) : it->second;
  }

  void set(CellId id, const RingElement& value) {
    if (!(value.ring() == ring_))
      throw Error(ErrorKind::ring_mismatch, "value in " + value.ring().to_string() +
                                                " stored in a " + ring_.to_string() + " cochain");
    if (value.is_zero()) values_.erase(id);
    else values_[id] = value;
  }

  void add(CellId id, const RingElement& value) { set(id, (*this)[id] + value); }

  Parity parity() const {
    bool even = false, odd = false;
    for (const auto& [id, v] : values_) {
      switch (v.parity()) {
        case Parity::even: even = true; break;
        case Parity::odd: odd = true; break;
        case Parity::mixed: return Parity::mixed;
      }
    }
    if (even && odd) return Parity::mixed;
    return odd ? Parity::odd : Parity::even;
  }

  CellValues& operator+=(const CellValues& o) {
    check_compatible(o);
    for (const auto& [id, v] : o.values_) add(id, v);
    return *this;
  }
  CellValues& operator-=(const CellValues& o) {
    check_compatible(o);
    for (const auto& [id, v] : o.values_) add(id, -v);
    return *this;
  }
  friend CellValues operator+(CellValues a, const CellValues& b) { return a += b; }
  friend CellValues operator-(CellValues a, const CellValues& b) { return a -= b; }
  friend CellValues operator*(const Rat& s, CellValues a) {
    CellValues out(a.degree_, a.ring_);
    for (const auto& [id, v] : a.values_) out.set(id, s * v);
    return out;
  }
  CellValues operator-() const { return Rat(-1) * *this; }
  friend bool operator==(const CellValues&, const CellValues&) = default;

 private:
  void check_compatible(const CellValues& o) const {
    if (!(ring_ == o.ring_))
      throw Error(ErrorKind::ring_mismatch, "cochains over " + ring_.to_string() + " and " +
                                                o.ring_.to_string());
    if (degree_ != o.degree_)
      throw Error(ErrorKind::dimension_mismatch, "cochains of degrees " +
                                                     std::to_string(degree_) + " and " +
                                                     std::to_string(o.degree_));
  }

  int degree_ = 0;
  Ring ring_;
  std::map<CellId, RingElement> values_;
};

using Cochain = CellValues<CochainTag>;
using Chain = CellValues<ChainTag>;

/// Throws Error(invalid_cell) unless every keyed cell has the cochain's degree.
template <class Tag>
void validate(const PComplex& x, const CellValues<Tag>& c);

/// Value of r on `cell` oriented by `tuple` (oddness: the opposite
/// orientation gives the negated value).
RingElement evaluate(const PComplex& x, const Cochain& r, CellId cell,
                     std::span<const std::size_t> tuple);

Cochain coboundary(const PComplex& x, const Cochain& r);
Chain boundary(const PComplex& x, const Chain& c);

/// Matrix of d on p-cochains: rows are (p+1)-cells, columns p-cells, both in
/// cells_of_dim order.
Mat coboundary_matrix(const PComplex& x, int p);

/// Rank of H^p(X; Q).
std::size_t cohomology_rank(const PComplex& x, int p);

/// A cochain w with d(w) = r, or std::nullopt when none exists. For p = 0
/// only the zero cochain qualifies (witness of degree -1).
std::optional<Cochain> is_coboundary(const PComplex& x, const Cochain& r);

bool is_cocycle(const PComplex& x, const Cochain& r);

/// The constant 0-cochain 1.
Cochain unit_cochain(const PComplex& x, Ring ring);

}  // namespace pcup
