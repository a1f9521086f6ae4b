#include "doctest.h"

#include "hocat/elevator.hpp"
#include "hocat/fixtures.hpp"
#include "hocat/functors.hpp"

#include <stdexcept>
#include <string>

using namespace hocat;

namespace {

// The poset 0 < 1 < 2 < 3 with a two-element cell group on every arrow.
// Rich enough in 2-cells that a mediator can be replaced by a genuine
// sign, and long enough that a coherence violation needs three
// composable non-identity arrows to show up.
FiniteBicategory signedChain() {
  FiniteBicategory B;
  B.name = "signed-chain";
  int aid[4][4] = {};
  for (int i = 0; i < 4; ++i) B.objects.push_back("o" + std::to_string(i));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      aid[i][j] = static_cast<int>(B.arrows.size());
      B.arrows.push_back(
          {"a" + std::to_string(i) + std::to_string(j), i, j});
    }
  B.idArrow.resize(4);
  for (int i = 0; i < 4; ++i) B.idArrow[i] = aid[i][i];
  int na = static_cast<int>(B.arrows.size());
  B.idCell.resize(na);
  for (int k = 0; k < na; ++k) {
    B.idCell[k] = static_cast<int>(B.cells.size());
    B.cells.push_back({"i_" + B.arrows[k].name, k, k});
    B.cells.push_back({"s_" + B.arrows[k].name, k, k});
  }
  int nc = static_cast<int>(B.cells.size());
  B.harrT.assign(na, std::vector<int>(na, -1));
  for (int l = 0; l < na; ++l)
    for (int r = 0; r < na; ++r)
      if (B.arrows[l].src == B.arrows[r].dst)
        B.harrT[l][r] = aid[B.arrows[r].src][B.arrows[l].dst];
  B.vcompT.assign(nc, std::vector<int>(nc, -1));
  B.hcellT.assign(nc, std::vector<int>(nc, -1));
  for (int b = 0; b < nc; ++b)
    for (int a = 0; a < nc; ++a) {
      if (b / 2 == a / 2) B.vcompT[b][a] = 2 * (b / 2) + (b % 2 + a % 2) % 2;
      int whole = B.harrT[B.cells[b].src][B.cells[a].src];
      if (whole != -1) B.hcellT[b][a] = 2 * whole + (b % 2 + a % 2) % 2;
    }
  return B;
}

// Identity maps on the involution bicategory, with the mediator on the
// pair (u, u) set to the sign cell. Coherent, but not strict.
Pseudofunctor signFunctor(const FiniteBicategory& N) {
  Pseudofunctor S = identity_functor(N);
  S.name = "sign";
  S.phi[{N.arrowId("u"), N.arrowId("u")}] = N.cellId("s");
  return S;
}

bool sameMaps(const Pseudofunctor& a, const Pseudofunctor& b) {
  return a.objMap == b.objMap && a.arrMap == b.arrMap &&
         a.cellMap == b.cellMap && a.xi == b.xi && a.phi == b.phi;
}

}  // namespace

TEST_CASE("identity pseudofunctors pass every axiom and relabel nothing") {
  for (const FiniteBicategory& B : {fixT(), fixP2(), fixN(), fixG()}) {
    CAPTURE(B.name);
    Pseudofunctor F = identity_functor(B);
    AxiomReport rep = check_pseudofunctor(B, B, F);
    for (const std::string& l : rep.lines()) CAPTURE(l);
    CHECK(rep.ok());
    CHECK(is_strict(B, B, F));
    for (size_t k = 0; k < B.cells.size(); ++k)
      CHECK(F.cellMap[k] == static_cast<int>(k));
  }
}

TEST_CASE("the signed chain validates and the identity on it is coherent") {
  FiniteBicategory B = signedChain();
  std::string why;
  REQUIRE_MESSAGE(B.validate(&why), why);
  REQUIRE(check_bicategory(B).ok());
  CHECK(check_pseudofunctor(B, B, identity_functor(B)).ok());
}

TEST_CASE("a corrupted mediator fails coherence at one named triple") {
  FiniteBicategory B = signedChain();
  Pseudofunctor F = identity_functor(B);
  F.phi[{B.arrowId("a12"), B.arrowId("a01")}] = B.cellId("s_a02");
  AxiomReport rep = check_pseudofunctor(B, B, F);
  CHECK_FALSE(rep.ok());
  // The sign sits between a12 and a01, so only a triple extending that
  // pair on the left by a23 sees an unbalanced composite.
  const AxiomCheck* p3 = rep.axiom("P3");
  REQUIRE(p3 != nullptr);
  CHECK(p3->failures == 1);
  CHECK(p3->first == "triple h=a23 g=a12 f=a01");
  for (const char* name : {"functoriality", "P1", "P2", "Nphi"}) {
    const AxiomCheck* other = rep.axiom(name);
    REQUIRE(other != nullptr);
    CAPTURE(other->axiom);
    CAPTURE(other->first);
    CHECK(other->pass());
  }
}

TEST_CASE("a sign-valued mediator can be coherent without being strict") {
  FiniteBicategory N = fixN();
  Pseudofunctor S = signFunctor(N);
  AxiomReport rep = check_pseudofunctor(N, N, S);
  for (const std::string& l : rep.lines()) CAPTURE(l);
  CHECK(rep.ok());
  CHECK_FALSE(is_strict(N, N, S));

  // The sign cancels against itself: S after S has identity mediators
  // again and agrees with the identity pseudofunctor everywhere.
  Pseudofunctor SS = compose_functors(N, N, N, S, S);
  CHECK(check_pseudofunctor(N, N, SS).ok());
  CHECK(is_strict(N, N, SS));
  CHECK(sameMaps(SS, identity_functor(N)));
}

TEST_CASE("strict 2-functor enumeration finds exactly the "
          "composition-preserving assignments") {
  FiniteBicategory T = fixT();
  FiniteBicategory P = fixP2();
  FiniteBicategory N = fixN();
  FiniteBicategory G = fixG();

  CHECK(enumerate_strict_functors(T, T).size() == 1);
  // The one-object source can land on either end of the poset.
  CHECK(enumerate_strict_functors(T, P).size() == 2);

  // From the cell-free involution: u either survives or collapses onto
  // the identity; the cells are identities and follow along.
  std::vector<Pseudofunctor> gn = enumerate_strict_functors(G, N);
  REQUIRE(gn.size() == 2);
  CHECK(gn[0].arrMap[G.arrowId("u")] == N.arrowId("id_X"));
  CHECK(gn[1].arrMap[G.arrowId("u")] == N.arrowId("u"));

  // Endomorphisms of the full involution: u survives or collapses, and
  // independently the sign cell survives or dies; the whisker table ties
  // the image of t to the image of s, giving two cell maps per arrow
  // map.
  std::vector<Pseudofunctor> nn = enumerate_strict_functors(N, N);
  REQUIRE(nn.size() == 4);
  bool sawIdentity = false;
  for (const Pseudofunctor& F : nn) {
    CAPTURE(F.name);
    AxiomReport rep = check_pseudofunctor(N, N, F);
    for (const std::string& l : rep.lines()) CAPTURE(l);
    CHECK(rep.ok());
    CHECK(is_strict(N, N, F));
    if (sameMaps(F, identity_functor(N))) sawIdentity = true;
  }
  CHECK(sawIdentity);
}

TEST_CASE("free terms evaluate through whiskered images and boundary "
          "mediators") {
  Computad c;
  c.objects = {"P", "Q", "R"};
  c.gen1 = {{"f", 0, 1}, {"g", 1, 2}};
  c.gen2 = {{"alpha", Path{0, 1, {0}}, Path{0, 1, {0}}, true},
            {"beta", Path{1, 2, {1}}, Path{1, 2, {1}}, true}};
  REQUIRE(c.validate());

  FiniteBicategory B = signedChain();
  FreePseudofunctor F = strict_free_functor(
      c, B, {B.objId("o0"), B.objId("o1"), B.objId("o2")},
      {B.arrowId("a01"), B.arrowId("a12")},
      {B.cellId("s_a01"), B.cellId("s_a12")}, "chain-image");
  PresentedBicategory freeSource{c, {}, 2000};
  REQUIRE(check_free_functor(freeSource, B, F).ok());

  // Single generators land on their images unchanged, inverses on the
  // inverse cell.
  CHECK(evaluate_functor(c, B, F, genTerm(c, 0)) == B.cellId("s_a01"));
  CHECK(evaluate_functor(c, B, F, genTerm(c, 0, true)) == B.cellId("s_a01"));

  Path gf{0, 2, {1, 0}};
  Path pf{0, 1, {0}};
  Path pg{1, 2, {1}};
  Path atP{0, 0, {}};
  Path atR{2, 2, {}};
  Term below{gf, gf,
             {Layer{pg, 0, false, atP}, Layer{atR, 1, false, pf}}};
  Term above{gf, gf,
             {Layer{atR, 1, false, pf}, Layer{pg, 0, false, atP}}};

  // With identity mediators the image is just the stacked whiskered
  // images, and the two interleavings agree by interchange.
  int img = evaluate_functor(c, B, F, below);
  CHECK(img == B.cellId("i_a02"));
  CHECK(img == evaluate_functor(c, B, F, above));

  // Now a sign mediator on the only chaining pair. The conjugation
  // cancels here, but the mediator square must still close against the
  // raw stack.
  FreePseudofunctor Fs = F;
  Fs.phi[{1, 0}] = B.cellId("s_a02");
  REQUIRE(check_free_functor(freeSource, B, Fs).ok());
  int med = word_mediator(c, B, Fs, gf);
  CHECK(med == B.cellId("s_a02"));
  int imgS = evaluate_functor(c, B, Fs, below);
  CHECK(imgS == B.cellId("i_a02"));
  int l0 = B.hcell(B.idCell[B.arrowId("a12")],
                   B.hcell(B.cellId("s_a01"), B.idCell[B.arrowId("a00")]));
  int l1 = B.hcell(B.idCell[B.arrowId("a22")],
                   B.hcell(B.cellId("s_a12"), B.idCell[B.arrowId("a01")]));
  int stack = B.vcomp(l1, l0);
  CHECK(stack == B.cellId("i_a02"));
  CHECK(B.vcomp(imgS, med) == B.vcomp(med, stack));

  // Vertical stacking is preserved on the nose.
  auto stacked = vcomp(c, below, above);
  REQUIRE(stacked.has_value());
  CHECK(evaluate_functor(c, B, Fs, *stacked) ==
        B.vcomp(evaluate_functor(c, B, Fs, below),
                evaluate_functor(c, B, Fs, above)));

  // A sign on xi conjugates away on identity terms.
  FreePseudofunctor Fx = F;
  Fx.xi[0] = B.cellId("s_a00");
  CHECK(evaluate_functor(c, B, Fx, idTerm(atP)) ==
        B.idCell[B.arrowId("a00")]);

  FreePseudofunctor Fbad = F;
  Fbad.cellMap[0] = -1;
  CHECK_THROWS_AS(evaluate_functor(c, B, Fbad, genTerm(c, 0)),
                  std::runtime_error);
}

TEST_CASE("a presented relation must map to equal cells in the target") {
  Computad c;
  c.objects = {"O"};
  c.gen1 = {{"w", 0, 0}};
  c.gen2 = {{"sigma", Path{0, 0, {0}}, Path{0, 0, {0}}, false}};
  PresentedBicategory P{c, {{genTerm(c, 0), idTerm(Path{0, 0, {0}})}}, 2000};
  REQUIRE(P.validate());

  FiniteBicategory N = fixN();
  FreePseudofunctor collapse = strict_free_functor(
      c, N, {N.objId("X")}, {N.arrowId("u")}, {N.cellId("i_u")});
  CHECK(check_free_functor(P, N, collapse).ok());

  FreePseudofunctor twist = strict_free_functor(
      c, N, {N.objId("X")}, {N.arrowId("u")}, {N.cellId("t")});
  AxiomReport rep = check_free_functor(P, N, twist);
  CHECK_FALSE(rep.ok());
  const AxiomCheck* rel = rep.axiom("relations");
  REQUIRE(rel != nullptr);
  CHECK(rel->failures == 1);
  CHECK(rel->first.find("relation 0") == 0);
}

TEST_CASE("identity transformations pass and are equivalences") {
  for (const FiniteBicategory& B : {fixT(), fixP2(), fixN(), fixG()}) {
    CAPTURE(B.name);
    Pseudofunctor F = identity_functor(B);
    PseudonaturalTransformation t = identity_transformation(B, B, F);
    TransformationReport rep = check_pseudonatural(B, B, F, F, t);
    for (const std::string& l : rep.checks.lines()) CAPTURE(l);
    CHECK(rep.ok());
    CHECK(rep.equivalence);
  }

  // Also across a genuinely non-strict endpoint.
  FiniteBicategory N = fixN();
  Pseudofunctor S = signFunctor(N);
  TransformationReport rep =
      check_pseudonatural(N, N, S, S, identity_transformation(N, N, S));
  for (const std::string& l : rep.checks.lines()) CAPTURE(l);
  CHECK(rep.ok());
  CHECK(rep.equivalence);
}

TEST_CASE("a sign-valued component still satisfies naturality") {
  FiniteBicategory N = fixN();
  Pseudofunctor F = identity_functor(N);
  PseudonaturalTransformation t = identity_transformation(N, N, F);
  t.name = "sign-component";
  t.thetaF[N.arrowId("u")] = N.cellId("t");
  TransformationReport rep = check_pseudonatural(N, N, F, F, t);
  for (const std::string& l : rep.checks.lines()) CAPTURE(l);
  CHECK(rep.ok());
  CHECK(rep.equivalence);
}

TEST_CASE("naturality fails when the endpoint functors disagree on a cell") {
  FiniteBicategory N = fixN();
  Pseudofunctor F = identity_functor(N);
  // The sign-killing endomorphism: u survives, s and t die.
  Pseudofunctor K = identity_functor(N);
  K.name = "kill-sign";
  K.cellMap[N.cellId("s")] = N.cellId("i_id_X");
  K.cellMap[N.cellId("t")] = N.cellId("i_u");
  REQUIRE(check_pseudofunctor(N, N, K).ok());

  PseudonaturalTransformation t = identity_transformation(N, N, F);
  TransformationReport rep = check_pseudonatural(N, N, F, K, t);
  CHECK_FALSE(rep.ok());
  const AxiomCheck* pn2 = rep.checks.axiom("PN2");
  REQUIRE(pn2 != nullptr);
  CHECK(pn2->failures == 2);
  CHECK(pn2->first == "cell alpha=s");
  CHECK(rep.checks.axiom("PN0")->pass());
  CHECK(rep.checks.axiom("PN1")->pass());
}

TEST_CASE("a transformation with a non-equivalence component is flagged") {
  FiniteBicategory T = fixT();
  FiniteBicategory P = fixP2();
  std::vector<Pseudofunctor> fs = enumerate_strict_functors(T, P);
  REQUIRE(fs.size() == 2);

  PseudonaturalTransformation t;
  t.name = "step";
  t.thetaX = {P.arrowId("a")};
  t.thetaF = {P.cellId("i_a")};
  TransformationReport rep = check_pseudonatural(T, P, fs[0], fs[1], t);
  for (const std::string& l : rep.checks.lines()) CAPTURE(l);
  CHECK(rep.ok());
  CHECK_FALSE(rep.equivalence);
  CHECK(rep.equivalenceNote == "component at X is not an equivalence");
}

TEST_CASE("component boundary mismatches are structural problems") {
  FiniteBicategory G = fixG();
  FiniteBicategory N = fixN();
  std::vector<Pseudofunctor> fs = enumerate_strict_functors(G, N);
  REQUIRE(fs.size() == 2);

  PseudonaturalTransformation t;
  t.thetaX = {N.arrowId("id_X")};
  t.thetaF = {N.cellId("i_id_X"), N.cellId("i_u")};
  TransformationReport rep = check_pseudonatural(G, N, fs[0], fs[1], t);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const std::string& p : rep.checks.problems)
    if (p.find("component at arrow u") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("modifications accept central cells and reject broken boundaries") {
  FiniteBicategory N = fixN();
  Pseudofunctor F = identity_functor(N);
  PseudonaturalTransformation idT = identity_transformation(N, N, F);

  Modification rho{"shift", {N.cellId("s")}};
  AxiomReport rep = check_modification(N, N, F, F, idT, idT, rho);
  for (const std::string& l : rep.lines()) CAPTURE(l);
  CHECK(rep.ok());

  Modification broken{"broken", {N.cellId("t")}};
  AxiomReport bad = check_modification(N, N, F, F, idT, idT, broken);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.problems.empty());
  const AxiomCheck* pm = bad.axiom("PM");
  REQUIRE(pm != nullptr);
  CHECK(pm->failures > 0);

  // The sign-component transformation is not isomorphic to the identity
  // one: neither candidate component closes the square.
  PseudonaturalTransformation signT = idT;
  signT.thetaF[N.arrowId("u")] = N.cellId("t");
  for (const char* cell : {"i_id_X", "s"}) {
    Modification attempt{"attempt", {N.cellId(cell)}};
    CAPTURE(cell);
    CHECK_FALSE(check_modification(N, N, F, F, idT, signT, attempt).ok());
  }
}

TEST_CASE("functor composition is associative on all stored data") {
  FiniteBicategory G = fixG();
  FiniteBicategory N = fixN();
  std::vector<Pseudofunctor> gn = enumerate_strict_functors(G, N);
  REQUIRE(gn.size() == 2);
  const Pseudofunctor& inj = gn[1];

  Pseudofunctor K = identity_functor(N);
  K.cellMap[N.cellId("s")] = N.cellId("i_id_X");
  K.cellMap[N.cellId("t")] = N.cellId("i_u");

  Pseudofunctor S = signFunctor(N);

  Pseudofunctor left = compose_functors(
      G, N, N, S, compose_functors(G, N, N, K, inj));
  Pseudofunctor right = compose_functors(
      G, N, N, compose_functors(N, N, N, S, K), inj);
  CHECK(sameMaps(left, right));
  CHECK(check_pseudofunctor(G, N, left).ok());
}
