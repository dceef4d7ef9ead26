#include <doctest.h>

#include "pcup/geom.hpp"
#include "test_util.hpp"

using namespace pcup;
using namespace testutil;

namespace {

ExtElement e(std::vector<int> idx, Rat c = 1) { return ExtElement::blade(blade_from_indices(idx), c); }

const char* const kAll[] = {"square", "triangle", "triangle_big", "triangle_barycentric", "cube",
                            "simplex3", "tetra_boundary", "path", "square_boundary", "cylinder",
                            "square_split"};

}  // namespace

TEST_CASE("cell multivectors") {
  const PComplex path = fixture("path");
  CHECK(cell_multivector(path, 5) == ExtElement::vector(vec({1, 1})));
  const PComplex sq = fixture("square");
  CHECK(cell_multivector(sq, 8) == e({1, 2}));
  CHECK(relative_volume(sq, 8) == 1);
  CHECK(cell_volume(sq, 8) == 1);

  Json j = load_json(std::string(PCUP_FIXTURE_DIR) + "/square.json");
  j["cells"][8]["orient"] = Json::array({0, 3, 1});
  CHECK(cell_multivector(complex_from_json(j), 8) == e({1, 2}, -1));

  const PComplex big = fixture("triangle_big");
  CHECK(cell_volume(big, big.cells_of_dim(2).front()) == 18);
  CHECK(cell_volume(fixture("cube"), fixture("cube").cells_of_dim(3).front()) == 1);
  CHECK(triangulate(fixture("cube"), fixture("cube").cells_of_dim(3).front()).size() == 6);
}

TEST_CASE("volume cocycles") {
  const PComplex sq = fixture("square");
  const Cochain v0 = vol_cocycle(sq, 0);
  CHECK(v0 == unit_cochain(sq, Ring::exterior(2)));
  CHECK(vol_cocycle(sq, 2)[8].value() == e({1, 2}, 2));
  for (const char* name : kAll) {
    const PComplex x = fixture(name);
    for (int q = 0; q <= x.top_dim(); ++q) CHECK(is_cocycle(x, vol_cocycle(x, q)));
  }
}

TEST_CASE("Pascal equations") {
  CHECK(pascal_by_normals(fixture("square"), 8));
  const PComplex reg = polytope_complex(
      3, {vec({1, 1, 1}), vec({1, -1, -1}), vec({-1, 1, -1}), vec({-1, -1, 1})});
  CHECK(check_pascal(reg));
  for (const char* name : kAll) CHECK(check_pascal(fixture(name)));
  const PComplex hex = polytope_complex(
      2, {vec({0, 0}), vec({3, 0}), vec({5, 2}), vec({4, 5}), vec({1, 4}), vec({-1, 2})});
  CHECK(check_pascal(hex));
}

TEST_CASE("membership in the geometric subring") {
  const PComplex sq = fixture("square");
  for (int q = 0; q <= 2; ++q) CHECK(in_R(sq, vol_cocycle(sq, q)));
  // e2 on both horizontal edges: closed, but e2 is not tangent to them.
  Cochain bad(1, Ring::exterior(2));
  bad.set(4, RingElement(Ring::exterior(2), e({2})));
  bad.set(6, RingElement(Ring::exterior(2), e({2})));
  REQUIRE(is_cocycle(sq, bad));
  CHECK_FALSE(in_R(sq, bad));
  CHECK(in_R(sq, Cochain(1, Ring::exterior(2))));
  CHECK_THROWS_AS(in_R(sq, Cochain(1, Ring::scalar())), Error);
}

TEST_CASE("Minkowski sums") {
  const std::vector<Vec> a{vec({0, 0}), vec({1, 0})}, b{vec({0, 0}), vec({0, 1})};
  const MinkowskiSum s = minkowski_sum_complex(2, {a, b});
  CHECK(s.complex.top_dim() == 2);
  CHECK(s.complex.vertices().size() == 4);
  for (const auto& [edge, faces] : s.labels) {
    REQUIRE(faces.size() == 2);
    const Vec dir = s.complex.cell(edge).tangent.front();
    CHECK(faces[0].vector + faces[1].vector == dir);
    if (dir[1] == 0) {
      CHECK(faces[0].is_edge());
      CHECK_FALSE(faces[1].is_edge());
    } else {
      CHECK_FALSE(faces[0].is_edge());
      CHECK(faces[1].is_edge());
    }
  }

  const MinkowskiSum single = minkowski_sum_complex(2, {{vec({0, 0}), vec({2, 0}), vec({0, 3})}});
  for (const auto& [edge, faces] : single.labels) CHECK(faces[0].vector == single.complex.cell(edge).tangent.front());

  const MinkowskiSum doubled = minkowski_sum_complex(1, {{vec({0}), vec({1})}, {vec({0}), vec({1})}});
  REQUIRE(doubled.labels.size() == 1);
  const auto& faces = doubled.labels.begin()->second;
  CHECK(faces[0].is_edge());
  CHECK(faces[1].is_edge());
  CHECK(faces[0].vector + faces[1].vector == doubled.complex.cell(doubled.labels.begin()->first).tangent.front());
}

TEST_CASE("mixed volumes") {
  const std::vector<Vec> a{vec({0, 0}), vec({1, 0})}, b{vec({0, 0}), vec({0, 1})};
  CHECK(mixed_volume({a, b}) == Rat(1, 2));
  CHECK(mixed_volume({b, a}) == Rat(1, 2));
  const auto cube = cube_points(3);
  CHECK(mixed_volume({cube, cube, cube}) == 1);
  const std::vector<Vec> tri{vec({0, 0}), vec({2, 0}), vec({0, 2})};
  CHECK(mixed_volume({tri, tri}) == 2);
  CHECK(mixed_volume({tri, a}) == mixed_volume({a, tri}));
  CHECK_THROWS_AS(mixed_volume({a}), Error);
}

TEST_CASE("volume by cup product") {
  const PComplex cube = polytope_complex(3, cube_points(3));
  const Vec v = sample_convenient(cube, 1);
  CHECK(volume_by_cup(cube, v) == 1);
  const PComplex big = fixture("triangle_big");
  CHECK(volume_by_cup(big, sample_convenient(big, 1)) == 18);
}
