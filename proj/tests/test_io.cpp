#include <doctest.h>

#include "pcup/errors.hpp"
#include "pcup/geom.hpp"
#include "pcup/io.hpp"
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

}  // namespace

TEST_CASE("rationals travel as strings") {
  CHECK(to_json(Rat(-3, 4)) == "-3/4");
  CHECK(rat_from_json(Json("7/14")) == Rat(1, 2));
  CHECK(rat_from_json(Json(5)) == 5);
  CHECK(kind_of([] { rat_from_json(Json("x")); }) == ErrorKind::parse);
  CHECK(parse_covector("1,-2/3") == Vec{1, Rat(-2, 3)});
  CHECK(kind_of([] { parse_covector("1,,2"); }) == ErrorKind::parse);
}

TEST_CASE("complex round trip") {
  for (const char* name : {"square", "cube", "cylinder", "triangle_barycentric"}) {
    const PComplex x = fixture(name);
    const PComplex y = complex_from_json(to_json(x));
    REQUIRE(y.size() == x.size());
    CHECK(y.vertices() == x.vertices());
    for (CellId c = 0; c < x.size(); ++c) {
      CHECK(y.cell(c).vertices == x.cell(c).vertices);
      CHECK(y.cell(c).orient == x.cell(c).orient);
    }
  }
}

TEST_CASE("cochain round trip") {
  Rng rng(41);
  const PComplex x = fixture("cube");
  for (const Ring& ring : {Ring::scalar(), Ring::exterior(3)})
    for (int p = 0; p <= 3; ++p) {
      const Cochain r = random_cochain(rng, x, p, ring);
      CHECK(cochain_from_json(to_json(r), 3) == r);
    }
  const Cochain vol1 = cochain_from_json(load_json(std::string(PCUP_FIXTURE_DIR) + "/square_vol1.json"), 2);
  CHECK(vol1 == vol_cocycle(fixture("square"), 1));
}

TEST_CASE("malformed input") {
  CHECK(kind_of([] { parse_json("{"); }) == ErrorKind::parse);
  CHECK(kind_of([] { complex_from_json(parse_json(R"({"dim": 2})")); }) == ErrorKind::parse);
  CHECK(kind_of([] {
          cochain_from_json(parse_json(R"({"degree": 1, "ring": "Z", "values": {}})"), 2);
        }) == ErrorKind::parse);
  CHECK(kind_of([] { load_json("/nonexistent/file.json"); }) == ErrorKind::parse);
}

TEST_CASE("polytopes") {
  CHECK(polytope_from_json(parse_json(R"([["0","0"],["1","0"]])")).size() == 2);
  CHECK(polytope_from_json(load_json(std::string(PCUP_FIXTURE_DIR) + "/unit_cube_points.json")).size() == 8);
}
