#include <doctest.h>

#include <set>

#include "pcup/cup.hpp"
#include "pcup/discriminant.hpp"
#include "pcup/geom.hpp"
#include "test_util.hpp"

using namespace pcup;
using namespace testutil;

namespace {

Rat value_at(const PComplex& x, std::size_t vertex, const Vec& v) { return dot(x.vertex(vertex), v); }

}  // namespace

TEST_CASE("pair set on a simplex has one pair ordered by v") {
  Rng rng(11);
  for (const char* name : {"triangle", "simplex3", "triangle_big"}) {
    const PComplex x = fixture(name);
    const CellId gamma = x.cells_of_dim(x.top_dim()).front();
    const int m = x.top_dim();
    for (int trial = 0; trial < 5; ++trial) {
      const Vec v = sample_convenient(x, static_cast<std::uint64_t>(trial + 1));
      for (int p = 0; p <= m; ++p) {
        const PairSet ps = pair_set(x, gamma, p, m - p, v);
        REQUIRE(ps.entries.size() == 1);
        const auto& e = ps.entries.front();
        for (auto a : x.cell(e.delta).vertices)
          for (auto b : x.cell(e.lambda).vertices) CHECK(value_at(x, a, v) <= value_at(x, b, v));
      }
    }
  }
}

TEST_CASE("pair set of the unit square at v = (1,2)") {
  const PComplex sq = fixture("square");
  const PairSet ps = pair_set(sq, 8, 1, 1, vec({1, 2}));
  std::set<std::pair<CellId, CellId>> got;
  for (const auto& e : ps.entries) got.insert({e.delta, e.lambda});
  // bottom 4, right 5, top 6, left 7
  CHECK(got == std::set<std::pair<CellId, CellId>>{{4, 5}, {7, 6}});
}

TEST_CASE("p = 0 pairs the v-minimizing vertex with the cell") {
  for (const char* name : {"square", "cube", "triangle"}) {
    const PComplex x = fixture(name);
    const Vec v = sample_convenient(x, 3);
    for (CellId gamma = 0; gamma < x.size(); ++gamma) {
      const int m = x.cell(gamma).dim;
      if (m == 0) continue;
      const PairSet ps = pair_set(x, gamma, 0, m, v);
      REQUIRE(ps.entries.size() == 1);
      CHECK(ps.entries[0].lambda == gamma);
      const auto vert = x.cell(ps.entries[0].delta).vertices.front();
      for (auto w : x.cell(gamma).vertices) CHECK(value_at(x, vert, v) <= value_at(x, w, v));
    }
  }
}

TEST_CASE("convenience") {
  const PComplex sq = fixture("square");
  CHECK(is_convenient(sq, vec({1, 2}), {{1, 1}}).convenient);
  const auto bad = is_convenient(sq, vec({1, 0}), {{1, 1}});
  CHECK_FALSE(bad.convenient);
  // the witness pairs two parallel edges
  const auto& a = sq.cell(bad.delta).tangent.front();
  const auto& b = sq.cell(bad.lambda).tangent.front();
  CHECK(rank(std::vector<Vec>{a, b}, 2) == 1);
  CHECK(bad.kind == FailureKind::non_transversal);
  for (const char* name : {"square", "triangle", "cube", "path"}) {
    const PComplex x = fixture(name);
    CHECK_FALSE(is_convenient(x, zeros(x.ambient_dim())).convenient);
  }
  CHECK_THROWS_AS(pair_set(sq, 8, 1, 1, vec({0, 1})), NotConvenient);
}

TEST_CASE("sample_convenient") {
  for (const char* name : {"square", "cube", "tetra_boundary", "cylinder", "triangle_barycentric"}) {
    const PComplex x = fixture(name);
    const Vec v = sample_convenient(x, 1);
    CHECK(is_convenient(x, v).convenient);
    CHECK(sample_convenient(x, 1) == v);
    for (const auto& h : discriminant(x)) CHECK(dot(h.normal, v) != 0);
  }
}

TEST_CASE("unit and zero") {
  Rng rng(12);
  for (const char* name : {"square", "triangle", "cube", "tetra_boundary"}) {
    const PComplex x = fixture(name);
    const Ring ring = Ring::exterior(static_cast<int>(x.ambient_dim()));
    const Vec v = sample_convenient(x, 2);
    const Cochain one = unit_cochain(x, ring);
    for (int p = 0; p <= x.top_dim(); ++p) {
      const Cochain r = random_cochain(rng, x, p, ring);
      CHECK(cup(x, one, r, v) == r);
      CHECK(cup(x, r, one, v) == r);
      CHECK(cup(x, Cochain(0, ring), r, v).is_zero());
    }
  }
}

TEST_CASE("vol_1 squared on the unit square") {
  const PComplex sq = fixture("square");
  const Cochain vol1 = vol_cocycle(sq, 1);
  const Cochain prod = cup(sq, vol1, vol1, vec({1, 2}));
  CHECK(prod[8].value() == ExtElement::blade(blade_from_indices({1, 2}), 2));
  CHECK(prod == vol_cocycle(sq, 2));
}

TEST_CASE("ring mismatch in cup") {
  const PComplex sq = fixture("square");
  CHECK_THROWS_AS(cup(sq, unit_cochain(sq, Ring::scalar()), vol_cocycle(sq, 1), vec({1, 2})), Error);
}

TEST_CASE("front/back face product") {
  const PComplex t = fixture("triangle");
  Rng rng(13);
  const Cochain a = random_cochain(rng, t, 1, Ring::scalar());
  const Cochain b = random_cochain(rng, t, 1, Ring::scalar());
  const Cochain c = cech_cup(t, a, b, {0, 1, 2});
  // edges [0,1] and [1,2]; the 2-cell is stored as (0,1,2)
  CHECK(c[6] == mul(a[3], b[5]));
  const Cochain f = random_cochain(rng, t, 0, Ring::scalar());
  const Cochain g = random_cochain(rng, t, 2, Ring::scalar());
  CHECK(cech_cup(t, f, g, {0, 1, 2})[6] == mul(f[0], g[6]));
  CHECK(cech_cup(t, f, g, {2, 0, 1})[6] == mul(f[2], g[6]));

  for (const char* name : {"triangle", "simplex3", "tetra_boundary", "square_split"}) {
    const PComplex x = fixture(name);
    const Vec v = sample_convenient(x, 4);
    const auto order = ascending_order(x, v);
    for (int p = 0; p <= x.top_dim(); ++p)
      for (int q = 0; p + q <= x.top_dim(); ++q) {
        const Cochain r = random_cochain(rng, x, p, Ring::exterior(static_cast<int>(x.ambient_dim())));
        const Cochain s = random_cochain(rng, x, q, Ring::exterior(static_cast<int>(x.ambient_dim())));
        CHECK(cech_cup(x, r, s, order) == cup(x, r, s, v));
      }
  }
}

TEST_CASE("ascending order") {
  const PComplex sq = fixture("square");
  CHECK(ascending_order(sq, vec({1, 2})) == std::vector<std::size_t>{0, 1, 3, 2});
  CHECK(ascending_order(sq, vec({1, 0})) == std::vector<std::size_t>{0, 3, 1, 2});
}

TEST_CASE("segment convenience") {
  const PComplex sq = fixture("square");
  const auto rep = segment_convenience(sq, vec({1, 2}), vec({-1, 2}), {{1, 1}});
  CHECK(rep.failures == std::set<Rat>{Rat(1, 2)});
  CHECK_FALSE(rep.whole_interval);
  CHECK(segment_convenience(sq, vec({1, 2}), vec({2, 1}), {{1, 1}}).clean());
}
