#include "doctest.h"

#include "hocat/finite_bicat.hpp"
#include "hocat/fixtures.hpp"

using namespace hocat;

TEST_CASE("built-in tables satisfy every bicategory axiom") {
  for (const FiniteBicategory& B : {fixT(), fixP2(), fixN(), fixG()}) {
    CAPTURE(B.name);
    CheckReport rep = check_bicategory(B);
    for (const std::string& p : rep.problems) CAPTURE(p);
    CHECK(rep.ok());
  }
}

TEST_CASE("a corrupted horizontal entry is reported as an interchange "
          "violation naming the offending quadruple") {
  FiniteBicategory B = fixN();
  int s = B.cellId("s");
  int t = B.cellId("t");
  REQUIRE(B.hcellT[t][s] == B.cellId("i_u"));
  B.hcellT[t][s] = t;
  CheckReport rep = check_bicategory(B);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const std::string& p : rep.problems)
    if (p.find("H2") != std::string::npos &&
        p.find("b2=t") != std::string::npos &&
        p.find("a1=s") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("partial tables are rejected before axiom checking") {
  FiniteBicategory B = fixN();
  B.hcellT[1][1] = -1;
  CheckReport rep = check_bicategory(B);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.problems.front().find("tables:") == 0);
}

TEST_CASE("the involution arrow is its own quasiinverse") {
  FiniteBicategory B = fixN();
  int u = B.arrowId("u");
  auto w = find_equivalence_witness(B, u);
  REQUIRE(w.has_value());
  CHECK(w->g == u);
  CHECK(w->triangles);
  CHECK(verify_equivalence_witness(B, *w));

  auto idw = find_equivalence_witness(B, B.arrowId("id_X"));
  REQUIRE(idw.has_value());
  CHECK(idw->g == B.arrowId("id_X"));
}

TEST_CASE("a one-way arrow admits no equivalence witness") {
  FiniteBicategory B = fixP2();
  CHECK_FALSE(find_equivalence_witness(B, B.arrowId("a")).has_value());
}

TEST_CASE("equivalences are quasiequivalences") {
  for (const FiniteBicategory& B : {fixT(), fixP2(), fixN(), fixG()}) {
    CAPTURE(B.name);
    for (size_t f = 0; f < B.arrows.size(); ++f)
      if (find_equivalence_witness(B, static_cast<int>(f)))
        CHECK(check_quasiequivalence(B, static_cast<int>(f)));
  }
}

TEST_CASE("one-way arrows can still be quasiequivalences") {
  // Composition against the single arrow of the poset relates hom-sets
  // that are empty or singletons, so both restriction functors are full
  // and faithful even though no quasiinverse exists.
  FiniteBicategory B = fixP2();
  CHECK(check_quasiequivalence(B, B.arrowId("a")));
}

TEST_CASE("quasiequivalence fails when composition collapses distinct cells") {
  // Extend the two-element-group tables with a second endoarrow v whose
  // cells collapse under whiskering with v: v has only its identity
  // cell, and v*s is forced to i_v, identifying s with i_id_X.
  FiniteBicategory B;
  B.name = "collapse";
  B.objects = {"X"};
  B.arrows = {{"id_X", 0, 0}, {"v", 0, 0}};
  B.cells = {{"i_id_X", 0, 0}, {"s", 0, 0}, {"i_v", 1, 1}};
  B.idArrow = {0};
  B.idCell = {0, 2};
  B.vcompT = {{0, 1, -1}, {1, 0, -1}, {-1, -1, 2}};
  // v*v = v keeps the arrow monoid associative.
  B.harrT = {{0, 1}, {1, 1}};
  B.hcellT = {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}};
  REQUIRE(B.validate());
  REQUIRE(check_bicategory(B).ok());
  CHECK_FALSE(check_quasiequivalence(B, B.arrowId("v")));
}

TEST_CASE("whiskering helpers agree with the tables") {
  FiniteBicategory B = fixN();
  int s = B.cellId("s");
  int u = B.arrowId("u");
  CHECK(B.whiskerArrowCell(u, s) == B.cellId("t"));
  CHECK(B.whiskerCellArrow(s, u) == B.cellId("t"));
  CHECK(B.inverseCell(s) == s);
  CHECK(B.cellInvertible(B.cellId("t")));
}
