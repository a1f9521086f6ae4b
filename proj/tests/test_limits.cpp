#include "doctest.h"

#include "hocat/fixtures.hpp"
#include "hocat/limits.hpp"

using namespace hocat;

TEST_CASE("poset endpoints are initial and terminal") {
  FiniteBicategory B = fixP2();
  auto ini = find_limit_witness(B, LimitKind::Initial);
  REQUIRE(ini.has_value());
  CHECK(ini->apex == B.objId("o0"));
  CHECK(verify_limit_witness(B, *ini).ok());

  auto ter = find_limit_witness(B, LimitKind::Terminal);
  REQUIRE(ter.has_value());
  CHECK(ter->apex == B.objId("o1"));

  LimitWitness wrong;
  wrong.kind = LimitKind::Initial;
  wrong.apex = B.objId("o1");
  LimitReport rep = verify_limit_witness(B, wrong);
  CHECK(rep.status == VerifyStatus::Fail);
  REQUIRE_FALSE(rep.notes.empty());
  CHECK(rep.notes.front().find("no arrow") != std::string::npos);
}

TEST_CASE("poset joins and meets are coproducts and products") {
  FiniteBicategory B = fixP2();
  int o0 = B.objId("o0"), o1 = B.objId("o1");
  auto join = find_limit_witness(B, LimitKind::coProduct, o0, o1);
  REQUIRE(join.has_value());
  CHECK(join->apex == o1);
  CHECK(verify_limit_witness(B, *join).ok());

  auto meet = find_limit_witness(B, LimitKind::Product, o0, o1);
  REQUIRE(meet.has_value());
  CHECK(meet->apex == o0);

  auto selfJoin = find_limit_witness(B, LimitKind::coProduct, o0, o0);
  REQUIRE(selfJoin.has_value());
  CHECK(selfJoin->apex == o0);
  // The codiagonal folds the two inclusions back to the identity.
  auto fold = induced_arrow(B, *selfJoin, B.idArrow[o0], B.idArrow[o0]);
  REQUIRE(fold.has_value());
  CHECK(fold->arrow == B.idArrow[o0]);
}

TEST_CASE("group-like one-object tables have no initial object or "
          "coproducts") {
  for (const FiniteBicategory& B : {fixN(), fixG()}) {
    CAPTURE(B.name);
    CHECK_FALSE(find_limit_witness(B, LimitKind::Initial).has_value());
    CHECK_FALSE(find_limit_witness(B, LimitKind::Terminal).has_value());
    CHECK_FALSE(find_limit_witness(B, LimitKind::coProduct, 0, 0).has_value());
    CHECK_FALSE(find_limit_witness(B, LimitKind::Product, 0, 0).has_value());
  }
}

TEST_CASE("group-like one-object tables have all square limits") {
  for (const FiniteBicategory& B : {fixT(), fixN(), fixG()}) {
    CAPTURE(B.name);
    for (LimitKind k : {LimitKind::Pushout, LimitKind::Pullback,
                        LimitKind::coComma, LimitKind::Comma}) {
      for (size_t f = 0; f < B.arrows.size(); ++f)
        for (size_t g = 0; g < B.arrows.size(); ++g) {
          CAPTURE(limitKindName(k));
          CAPTURE(B.arrows[f].name);
          CAPTURE(B.arrows[g].name);
          auto w = find_limit_witness(B, k, static_cast<int>(f),
                                      static_cast<int>(g));
          REQUIRE(w.has_value());
          CHECK(verify_limit_witness(B, *w).ok());
        }
    }
  }
}

TEST_CASE("poset squares exist for every span and cospan") {
  FiniteBicategory B = fixP2();
  int a = B.arrowId("a");
  auto po = find_limit_witness(B, LimitKind::Pushout, B.idArrow[0], a);
  REQUIRE(po.has_value());
  CHECK(po->apex == B.objId("o1"));
  auto pb = find_limit_witness(B, LimitKind::Pullback, a, B.idArrow[1]);
  REQUIRE(pb.has_value());
  CHECK(pb->apex == B.objId("o0"));
}

TEST_CASE("an unsuitable apex is rejected with a counterexample cone") {
  FiniteBicategory B = fixN();
  LimitWitness w;
  w.kind = LimitKind::coProduct;
  w.apex = 0;
  w.obj0 = 0;
  w.obj1 = 0;
  w.leg0 = B.arrowId("id_X");
  w.leg1 = B.arrowId("u");
  LimitReport rep = verify_limit_witness(B, w);
  CHECK(rep.status == VerifyStatus::Fail);
  bool mentioned = false;
  for (const std::string& n : rep.notes)
    if (n.find("no factorization") != std::string::npos) mentioned = true;
  CHECK(mentioned);
}

TEST_CASE("a corrupted stored choice is caught") {
  FiniteBicategory B = fixN();
  int u = B.arrowId("u");
  auto w = find_limit_witness(B, LimitKind::Pushout, u, u);
  REQUIRE(w.has_value());
  REQUIRE_FALSE(w->choices.empty());
  auto& ch = w->choices.begin()->second;
  ch.arrow = (ch.arrow == 0) ? 1 : 0;
  LimitReport rep = verify_limit_witness(B, *w);
  CHECK(rep.status == VerifyStatus::Fail);
  bool mentioned = false;
  for (const std::string& n : rep.notes)
    if (n.find("stored choice") != std::string::npos) mentioned = true;
  CHECK(mentioned);
}

TEST_CASE("a tiny cone bound reports inconclusive") {
  FiniteBicategory B = fixP2();
  auto join = find_limit_witness(B, LimitKind::coProduct, 0, 1);
  REQUIRE(join.has_value());
  LimitReport rep = verify_limit_witness(B, *join, 0);
  CHECK(rep.status == VerifyStatus::Inconclusive);
}
