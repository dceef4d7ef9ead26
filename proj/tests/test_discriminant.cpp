#include <doctest.h>

#include <algorithm>

#include "pcup/discriminant.hpp"
#include "pcup/geom.hpp"
#include "test_util.hpp"

using namespace pcup;
using namespace testutil;

namespace {

bool has_triple(const std::vector<SpecialTriple>& ts, CellId d, CellId l, CellId g) {
  return std::any_of(ts.begin(), ts.end(), [&](const SpecialTriple& t) {
    return t.delta == d && t.lambda == l && t.gamma == g;
  });
}

std::vector<Vec> normals(const std::vector<Hyperplane>& hs) {
  std::vector<Vec> out;
  for (const auto& h : hs) out.push_back(h.normal);
  return out;
}

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

TEST_CASE("special triples of the square at level (1,1)") {
  const PComplex sq = fixture("square");
  const auto ts = special_triples(sq, 1, 1);
  CHECK(ts.size() == 4);
  for (CellId e : sq.cells_of_dim(1)) CHECK(has_triple(ts, e, e, e));
}

TEST_CASE("non-maximal edges and polygons give the expected triples") {
  const PComplex cube = fixture("cube");
  const auto all = special_triples(cube);
  for (CellId e : cube.cells_of_dim(1)) CHECK(has_triple(all, e, e, e));
  for (CellId g : cube.cells_of_dim(2))
    for (const auto& [side, s] : cube.cell(g).facets) CHECK(has_triple(all, side, g, g));
}

TEST_CASE("discriminant") {
  CHECK(discriminant(fixture("path")).empty());
  CHECK(normals(discriminant(fixture("square"))) == std::vector<Vec>{vec({0, 1}), vec({1, 0})});
  CHECK(normals(discriminant(fixture("cube"))) ==
        std::vector<Vec>{vec({0, 0, 1}), vec({0, 1, 0}), vec({1, 0, 0})});
  for (const auto& h : discriminant(fixture("square"))) CHECK_FALSE(h.triples.empty());
}

TEST_CASE("classify_point") {
  const PComplex sq = fixture("square");
  auto c = classify_point(sq, vec({1, 2}));
  CHECK(c.kind == PointClass::Kind::convenient);
  CHECK(c.convenient);
  c = classify_point(sq, vec({0, 1}));
  CHECK(c.kind == PointClass::Kind::on_unconvenient_hyperplane);
  CHECK(c.hyperplanes == std::vector<Vec>{vec({1, 0})});
  CHECK_FALSE(c.convenient);
  c = classify_point(sq, vec({0, 0}));
  CHECK(c.hyperplanes == normals(unconvenient_hyperplanes(sq)));
  CHECK(std::string(to_string(PointClass::Kind::uncommon)) == "uncommon");
}

TEST_CASE("theta cochain") {
  const PComplex sq = fixture("square");
  Rng rng(21);
  const Ring ring = Ring::exterior(2);
  const auto triples = special_triples(sq, 1, 1);
  const Cochain a = random_cochain(rng, sq, 1, ring), b = random_cochain(rng, sq, 1, ring);
  for (const auto& t : triples) {
    const Vec phi = t.line;
    const Cochain th = theta_cochain(sq, a, b, t, phi);
    CHECK(th.degree() == 1);
    CHECK(theta_cochain(sq, a, b, t, Rat(2) * phi) == th);
    CHECK(theta_cochain(sq, a, b, t, -phi) == -th);
    Cochain a0 = a;
    a0.set(t.delta, RingElement::zero(ring));
    CHECK(theta_cochain(sq, a0, b, t, phi).is_zero());
    const Cochain vol1 = vol_cocycle(sq, 1);
    CHECK(theta_cochain(sq, vol1, vol1, t, phi).is_zero());
    const Vec off{t.line[1], -t.line[0]};
    CHECK(kind_of([&] { theta_cochain(sq, a, b, t, off); }) == ErrorKind::phi_on_hyperplane);
  }
}

TEST_CASE("wall crossing on the square") {
  const PComplex sq = fixture("square");
  const Cochain r = cochain_from_json(load_json(std::string(PCUP_FIXTURE_DIR) + "/square_r1.json"), 2);
  const Vec u = vec({1, 2}), v = vec({-1, 2});
  const WallCrossing w = wall_crossing(sq, r, r, u, v);
  CHECK(w.normal == vec({1, 0}));
  CHECK(w.tau == Rat(1, 2));
  CHECK(w.kappa == vec({0, 2}));
  CHECK(w.delta == cup(sq, r, r, v) - cup(sq, r, r, u));
  CHECK(wall_crossing_delta(sq, r, r, u, v) == w.delta);

  const Cochain vol1 = vol_cocycle(sq, 1);
  const WallCrossing g = wall_crossing(sq, vol1, vol1, u, v);
  CHECK(g.delta.is_zero());
  CHECK(cup(sq, vol1, vol1, u) == cup(sq, vol1, vol1, v));
}

TEST_CASE("wall crossing hypotheses") {
  const PComplex sq = fixture("square");
  const Cochain r = cochain_from_json(load_json(std::string(PCUP_FIXTURE_DIR) + "/square_r1.json"), 2);
  CHECK(kind_of([&] { wall_crossing(sq, r, r, vec({1, 2}), vec({2, 1})); }) == ErrorKind::no_crossing);
  CHECK(cup(sq, r, r, vec({1, 2})) == cup(sq, r, r, vec({2, 1})));
  CHECK(kind_of([&] { wall_crossing(sq, r, r, vec({1, 2}), vec({-2, -1})); }) ==
        ErrorKind::multiple_crossings);
  // through the origin: kappa on both hyperplanes
  CHECK(kind_of([&] { wall_crossing(sq, r, r, vec({1, 1}), vec({-1, -1})); }) == ErrorKind::bad_kappa);
  CHECK_THROWS_AS(wall_crossing(sq, r, r, vec({0, 1}), vec({-1, 2})), NotConvenient);
  Cochain notclosed(1, Ring::scalar());
  notclosed.set(4, RingElement::scalar(1));
  CHECK(kind_of([&] { wall_crossing(sq, notclosed, r, vec({1, 2}), vec({-1, 2})); }) ==
        ErrorKind::not_a_cocycle);
}

TEST_CASE("same_component") {
  const PComplex sq = fixture("square");
  CHECK(same_component(sq, vec({1, 2}), vec({3, 1})));
  CHECK_FALSE(same_component(sq, vec({1, 2}), vec({-1, 2})));
  CHECK_FALSE(same_component(sq, vec({0, 2}), vec({0, 2})));
}
