#include <doctest.h>

#include "pcup/lp.hpp"
#include "test_util.hpp"

using namespace pcup;
using namespace pcup::lp;
using testutil::vec;

TEST_CASE("bounded maximum") {
  // max x + y subject to x + 2y <= 4, 3x + y <= 6, x, y >= 0
  Problem p(2);
  p.add(vec({1, 2}), Relation::le, 4);
  p.add(vec({3, 1}), Relation::le, 6);
  const Result r = maximize(p, vec({1, 1}));
  REQUIRE(r.status == Status::optimal);
  CHECK(r.value == Rat(14, 5));
  CHECK(r.x == Vec{Rat(8, 5), Rat(6, 5)});
}

TEST_CASE("infeasible and unbounded") {
  Problem p(1);
  p.add(vec({1}), Relation::ge, 3);
  p.add(vec({1}), Relation::le, 2);
  CHECK_FALSE(feasible(p));
  CHECK(maximize(p, vec({1})).status == Status::infeasible);

  Problem q(2);
  q.add(vec({1, -1}), Relation::le, 1);
  CHECK(maximize(q, vec({1, 1})).status == Status::unbounded);
}

TEST_CASE("free variables and equalities") {
  Problem p(2, true);
  p.add(vec({1, 1}), Relation::eq, -3);
  p.add(vec({1, 0}), Relation::ge, -5);
  const Result r = minimize(p, vec({1, 0}));
  REQUIRE(r.status == Status::optimal);
  CHECK(r.value == -5);
  CHECK(r.x == vec({-5, 2}));
}

TEST_CASE("degenerate vertex does not cycle") {
  Problem p(4);
  p.add(Vec{Rat(1, 4), -8, -1, 9}, Relation::le, 0);
  p.add(Vec{Rat(1, 2), -12, Rat(-1, 2), 3}, Relation::le, 0);
  p.add(vec({0, 0, 1, 0}), Relation::le, 1);
  const Result r = maximize(p, Vec{Rat(3, 4), -20, Rat(1, 2), -6});
  REQUIRE(r.status == Status::optimal);
  CHECK(r.value == Rat(5, 4));
}
