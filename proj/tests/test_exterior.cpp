#include <doctest.h>

#include "pcup/errors.hpp"
#include "pcup/exterior.hpp"
#include "test_util.hpp"

using namespace pcup;
using testutil::vec;

namespace {
ExtElement e(std::vector<int> idx, Rat c = 1) { return ExtElement::blade(blade_from_indices(idx), c); }
}  // namespace

TEST_CASE("addition") {
  CHECK((e({1}) + -e({1})).is_zero());
  const auto s = e({1}) + e({2});
  CHECK(s.terms().size() == 2);
  CHECK(e({1, 2}, Rat(1, 2)) + e({1, 2}, Rat(1, 3)) == e({1, 2}, Rat(5, 6)));
}

TEST_CASE("wedge signs") {
  CHECK(e({1}).wedge(e({2})) == e({1, 2}));
  CHECK(e({2}).wedge(e({1})) == e({1, 2}, -1));
  CHECK(e({1}).wedge(e({1})).is_zero());
  CHECK((e({1}) + e({2})).wedge(e({1, 2})).is_zero());
  CHECK(e({1, 3}).wedge(e({2})) == e({1, 2, 3}, -1));
  CHECK(wedge_sign(blade_from_indices({2, 3}), blade_from_indices({1})) == 1);
  CHECK(wedge_sign(blade_from_indices({1}), blade_from_indices({1, 2})) == 0);
}

TEST_CASE("wedge_all is a determinant") {
  const auto w = wedge_all({vec({1, 2}), vec({3, 4})});
  CHECK(w == e({1, 2}, -2));
  CHECK(wedge_all({}) == ExtElement(Rat(1)));
  CHECK(ExtElement::vector(vec({0, 3, 0})) == e({2}, 3));
}

TEST_CASE("parity") {
  CHECK(ExtElement(Rat(5)).parity() == Parity::even);
  CHECK((e({1}) + e({1, 2, 3})).parity() == Parity::odd);
  CHECK((ExtElement(Rat(1)) + e({1})).parity() == Parity::mixed);
  CHECK(e({1, 2}).homogeneous_grade() == 2);
  CHECK((e({1}) + e({1, 2})).homogeneous_grade() == -1);
}

TEST_CASE("graded commutativity") {
  const auto a = e({1}) + e({2, 3}), b = e({4}) + e({2});
  // odd with odd anticommutes, even with anything commutes
  CHECK(e({1}).wedge(e({4})) == -(e({4}).wedge(e({1}))));
  CHECK(e({2, 3}).wedge(b) == b.wedge(e({2, 3})));
  CHECK(a.wedge(b).wedge(e({5})) == a.wedge(b.wedge(e({5}))));
}

TEST_CASE("ring mismatch") {
  const auto q = RingElement::scalar(2);
  const auto x = RingElement(Ring::exterior(2), e({1}));
  const auto y = RingElement(Ring::exterior(3), e({1}));
  for (auto op : {+[](const RingElement& a, const RingElement& b) { return add(a, b); },
                  +[](const RingElement& a, const RingElement& b) { return mul(a, b); }}) {
    CHECK_THROWS_AS(op(q, x), Error);
    CHECK_THROWS_AS(op(x, y), Error);
    try {
      op(x, y);
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::ring_mismatch);
    }
  }
  CHECK(mul(x, RingElement(Ring::exterior(2), e({2}))).value() == e({1, 2}));
  CHECK(mul(q, q) == RingElement::scalar(4));
}

TEST_CASE("exterior dimension is enforced") {
  CHECK_THROWS_AS(RingElement(Ring::exterior(2), e({3})), Error);
}
