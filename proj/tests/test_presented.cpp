#include "doctest.h"

#include "hocat/presented.hpp"

using namespace hocat;

namespace {

// A strictly associative multiplication on one endo-arrow.
PresentedBicategory assocMonoid() {
  PresentedBicategory P;
  Computad& c = P.computad;
  c.objects = {"X"};
  c.gen1 = {{"e", 0, 0}};
  c.gen2.resize(1);
  c.gen2[0] = {"mu", c.makePath({0, 0}), c.makePath({0}), false};
  REQUIRE(c.validate());
  Term mu = genTerm(c, 0);
  Path e = c.makePath({0});
  auto lhs = vcomp(c, mu, whiskerRight(c, mu, e));
  auto rhs = vcomp(c, mu, whiskerLeft(c, e, mu));
  REQUIRE(lhs.has_value());
  REQUIRE(rhs.has_value());
  P.relations.emplace_back(*lhs, *rhs);
  REQUIRE(P.validate());
  return P;
}

// Left-to-right folds of e^n down to e with the given association shape:
// bits[i] == 0 multiplies at the left end, 1 at the right end.
Term fold(const Computad& c, size_t n, const std::vector<int>& bits) {
  Term t = idTerm(c.makePath(std::vector<Gen1Id>(n, 0)));
  size_t width = n;
  for (int b : bits) {
    Layer l;
    l.gen = 0;
    Path rest = c.makePath(std::vector<Gen1Id>(width - 2, 0));
    if (width == 2) rest = c.idPath(0);
    if (b == 0) {
      l.left = c.idPath(0);
      l.right = rest;
    } else {
      l.left = rest;
      l.right = c.idPath(0);
    }
    t.layers.push_back(l);
    t.dst = layerDst(c, l);
    width -= 1;
  }
  return t;
}

}  // namespace

TEST_CASE("associativity relation connects all folds of a power") {
  PresentedBicategory P = assocMonoid();
  const Computad& c = P.computad;
  Term leftFold = fold(c, 4, {0, 0, 0});
  Term rightFold = fold(c, 4, {1, 1, 1});
  Term mixed = fold(c, 4, {1, 0, 1});
  REQUIRE(validTerm(c, leftFold));
  REQUIRE(validTerm(c, rightFold));
  REQUIRE(validTerm(c, mixed));
  CHECK(presented_equal(P, leftFold, rightFold) == PresentedEq::Equal);
  CHECK(presented_equal(P, leftFold, mixed) == PresentedEq::Equal);
}

TEST_CASE("an unrelated generator stays separate") {
  PresentedBicategory P = assocMonoid();
  Computad& c = P.computad;
  c.gen2.push_back({"nu", c.makePath({0, 0}), c.makePath({0}), false});
  Term top = fold(c, 3, {0, 0});
  Term other = top;
  other.layers[1].gen = 1;
  REQUIRE(validTerm(c, other));
  CHECK(presented_equal(P, top, other) == PresentedEq::NotEqualWithinBound);
}

TEST_CASE("whiskered relation instances inside a wider word are found") {
  PresentedBicategory P = assocMonoid();
  const Computad& c = P.computad;
  Path e = c.makePath({0});
  Term a = whiskerLeft(c, e, *vcomp(c, genTerm(c, 0),
                                    whiskerRight(c, genTerm(c, 0), e)));
  Term b = whiskerLeft(c, e, *vcomp(c, genTerm(c, 0),
                                    whiskerLeft(c, e, genTerm(c, 0))));
  REQUIRE(validTerm(c, a));
  REQUIRE(validTerm(c, b));
  CHECK_FALSE(equalInFree(c, a, b));
  CHECK(presented_equal(P, a, b) == PresentedEq::Equal);
}

TEST_CASE("unit laws need the matching relation") {
  PresentedBicategory P;
  Computad& c = P.computad;
  c.objects = {"X"};
  c.gen1 = {{"e", 0, 0}};
  c.gen2.resize(2);
  c.gen2[0] = {"mu", c.makePath({0, 0}), c.makePath({0}), false};
  c.gen2[1] = {"eta", c.idPath(0), c.makePath({0}), false};
  REQUIRE(c.validate());
  Path e = c.makePath({0});
  Term mu = genTerm(c, 0);
  Term eta = genTerm(c, 1);
  Term leftUnit = *vcomp(c, mu, whiskerRight(c, eta, e));
  Term rightUnit = *vcomp(c, mu, whiskerLeft(c, e, eta));
  P.relations.emplace_back(leftUnit, idTerm(e));
  REQUIRE(P.validate());

  P.searchBound = 400;
  CHECK(presented_equal(P, leftUnit, idTerm(e)) == PresentedEq::Equal);
  CHECK(presented_equal(P, rightUnit, idTerm(e)) ==
        PresentedEq::NotEqualWithinBound);

  P.relations.emplace_back(rightUnit, idTerm(e));
  CHECK(presented_equal(P, rightUnit, idTerm(e)) == PresentedEq::Equal);
  // Both composites now collapse to the identity, hence to each other.
  CHECK(presented_equal(P, leftUnit, rightUnit) == PresentedEq::Equal);
}

TEST_CASE("a tiny bound reports failure instead of searching on") {
  PresentedBicategory P = assocMonoid();
  P.searchBound = 2;
  const Computad& c = P.computad;
  Term leftFold = fold(c, 4, {0, 0, 0});
  Term rightFold = fold(c, 4, {1, 1, 1});
  CHECK(presented_equal(P, leftFold, rightFold) ==
        PresentedEq::NotEqualWithinBound);
}
