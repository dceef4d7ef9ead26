#include <doctest.h>

#include "pcup/errors.hpp"
#include "pcup/geom.hpp"
#include "pcup/pcomplex.hpp"
#include "test_util.hpp"

using namespace pcup;
using namespace testutil;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::parse;
}

Cochain indicator(const PComplex& x, CellId id) {
  Cochain c(x.cell(id).dim, Ring::scalar());
  c.set(id, RingElement::scalar(1));
  return c;
}

}  // namespace

TEST_CASE("triangle closure is a valid 2-complex") {
  const PComplex t = fixture("triangle");
  CHECK(t.size() == 7);
  CHECK(t.top_dim() == 2);
  CHECK(t.is_simplicial());
  CHECK_FALSE(fixture("square").is_simplicial());
}

TEST_CASE("two triangles sharing an edge") {
  const PComplex x = simplicial_complex(2, {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})},
                                        {{0, 1, 2}, {1, 2, 3}});
  CHECK(x.cells_of_dim(2).size() == 2);
  CHECK(x.cells_of_dim(1).size() == 5);
}

TEST_CASE("validation errors") {
  CHECK(kind_of([] {
          build_complex(2, {vec({0, 0}), vec({2, 2}), vec({0, 2}), vec({2, 0})},
                        {{{0}, {}}, {{1}, {}}, {{2}, {}}, {{3}, {}}, {{0, 1}, {}}, {{2, 3}, {}}});
        }) == ErrorKind::bad_intersection);
  CHECK(kind_of([] { fixture("crossing_segments"); }) == ErrorKind::bad_intersection);
  CHECK(kind_of([] { fixture("square_missing_edge"); }) == ErrorKind::not_a_face_closure);
  try {
    fixture("square_missing_edge");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("{0,1,2,3}") != std::string::npos);
  }
  // A vertex cell inside an edge.
  CHECK(kind_of([] {
          build_complex(1, {vec({0}), vec({1}), vec({2})},
                        {{{0}, {}}, {{1}, {}}, {{2}, {}}, {{0, 2}, {}}});
        }) == ErrorKind::bad_intersection);
  // An edge listing a non-extreme point.
  CHECK(kind_of([] {
          build_complex(1, {vec({0}), vec({1}), vec({2})},
                        {{{0}, {}}, {{1}, {}}, {{2}, {}}, {{0, 1, 2}, {}}});
        }) == ErrorKind::redundant_vertex);
  // Collinear triangle.
  CHECK(kind_of([] {
          simplicial_complex(2, {vec({0, 0}), vec({1, 1}), vec({2, 2})}, {{0, 1, 2}});
        }) != ErrorKind::parse);
}

TEST_CASE("facets") {
  const PComplex sq = fixture("square");
  CHECK(sq.cell(8).facets.size() == 4);
  CHECK(sq.cell(4).facets.size() == 2);
  const auto pts = std::vector<Vec>{vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
  CHECK(enumerate_facets(pts, {0, 1, 2, 3}).size() == 4);
  CHECK(enumerate_facets(cube_points(3), {0, 1, 2, 3, 4, 5, 6, 7}).size() == 6);
}

TEST_CASE("incidence convention") {
  const PComplex sq = fixture("square");
  // edge 4 runs 0 -> 1
  CHECK(sq.incidence(4, 1) == 1);
  CHECK(sq.incidence(4, 0) == -1);
  // counterclockwise square, bottom edge 0 -> 1
  CHECK(sq.incidence(8, 4) == 1);
  CHECK(sq.incidence(8, 5) == 1);
  CHECK(sq.incidence(8, 6) == -1);  // top edge stored 3 -> 2
  CHECK(sq.incidence(8, 7) == -1);  // left edge stored 0 -> 3
  // reversing the facet orientation flips the sign
  const PComplex flipped = complex_from_json([] {
    Json j = load_json(std::string(PCUP_FIXTURE_DIR) + "/square.json");
    j["cells"][4]["orient"] = Json::array({1, 0});
    return j;
  }());
  CHECK(flipped.incidence(8, 4) == -1);
  CHECK(sq.relative_orientation(8, std::vector<std::size_t>{0, 3, 1}) == -1);
  CHECK(sq.relative_orientation(8, std::vector<std::size_t>{1, 2, 0}) == 1);
}

TEST_CASE("coboundary") {
  const PComplex seg = simplicial_complex(1, {vec({0}), vec({1})}, {{0, 1}});
  const CellId a = *seg.find({0}), e = *seg.find({0, 1});
  CHECK(coboundary(seg, indicator(seg, a))[e] == RingElement::scalar(-1));

  Rng rng(5);
  for (const char* name : {"square", "triangle", "cube", "tetra_boundary", "cylinder", "square_split"}) {
    const PComplex x = fixture(name);
    for (int p = 0; p + 2 <= x.top_dim(); ++p) {
      const Cochain r = random_cochain(rng, x, p, Ring::exterior(static_cast<int>(x.ambient_dim())));
      CHECK(coboundary(x, coboundary(x, r)).is_zero());
    }
  }
  CHECK(coboundary(fixture("square"), vol_cocycle(fixture("square"), 1)).is_zero());
}

TEST_CASE("boundary is adjoint to coboundary") {
  const PComplex x = fixture("cube");
  Rng rng(6);
  for (int p = 0; p < 3; ++p) {
    const Cochain r = random_cochain(rng, x, p, Ring::scalar());
    Chain c(p + 1, Ring::scalar());
    for (CellId id : x.cells_of_dim(p + 1)) c.set(id, RingElement::scalar(uniform(rng, -3, 3)));
    const Chain bc = boundary(x, c);
    Rat lhs = 0, rhs = 0;
    const Cochain dr = coboundary(x, r);
    for (const auto& [id, v] : c.values()) lhs += v.value().coeff(0) * dr[id].value().coeff(0);
    for (const auto& [id, v] : bc.values()) rhs += v.value().coeff(0) * r[id].value().coeff(0);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cohomology ranks") {
  const PComplex t = fixture("triangle");
  CHECK(cohomology_rank(t, 0) == 1);
  CHECK(cohomology_rank(t, 1) == 0);
  CHECK(cohomology_rank(t, 2) == 0);
  const PComplex circle = fixture("square_boundary");
  CHECK(cohomology_rank(circle, 0) == 1);
  CHECK(cohomology_rank(circle, 1) == 1);
  const PComplex two = build_complex(1, {vec({0}), vec({1})}, {{{0}, {}}, {{1}, {}}});
  CHECK(cohomology_rank(two, 0) == 2);
  const PComplex sphere = fixture("tetra_boundary");
  CHECK(cohomology_rank(sphere, 1) == 0);
  CHECK(cohomology_rank(sphere, 2) == 1);
}

TEST_CASE("is_coboundary") {
  const PComplex circle = fixture("square_boundary");
  const Cochain zero(1, Ring::scalar());
  auto w = is_coboundary(circle, zero);
  REQUIRE(w);
  CHECK(coboundary(circle, *w) == zero);

  Rng rng(8);
  const PComplex cube = fixture("cube");
  const Cochain r = random_cochain(rng, cube, 1, Ring::exterior(3));
  const Cochain dr = coboundary(cube, r);
  w = is_coboundary(cube, dr);
  REQUIRE(w);
  CHECK(coboundary(cube, *w) == dr);

  // a single edge generates H^1 of the circle
  CHECK_FALSE(is_coboundary(circle, indicator(circle, circle.cells_of_dim(1).front())));
}

TEST_CASE("cochain storage") {
  const PComplex sq = fixture("square");
  Cochain c(1, Ring::scalar());
  CHECK_THROWS_AS(c.set(4, RingElement(Ring::exterior(2), ExtElement(Rat(1)))), Error);
  c.set(8, RingElement::scalar(1));
  CHECK_THROWS_AS(validate(sq, c), Error);
  Cochain d(1, Ring::scalar());
  d.set(4, RingElement::scalar(2));
  CHECK(evaluate(sq, d, 4, std::vector<std::size_t>{1, 0}) == RingElement::scalar(-2));
  CHECK(unit_cochain(sq, Ring::scalar()).values().size() == 4);
}
