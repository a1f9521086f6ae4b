#include "hocat/functors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hocat {

namespace {

int mapAt(const std::vector<int>& v, int i) {
  return (i >= 0 && i < static_cast<int>(v.size())) ? v[i] : -1;
}

int phiAt(const std::map<std::pair<int, int>, int>& phi, int g, int f) {
  auto it = phi.find({g, f});
  return it == phi.end() ? -1 : it->second;
}

// lhs == rhs with both defined; tags the description when a composite
// came out undefined so broken data fails loudly instead of vacuously.
bool sidesAgree(int lhs, int rhs, std::string* desc) {
  if (lhs == -1 || rhs == -1) {
    *desc += " (undefined composite)";
    return false;
  }
  return lhs == rhs;
}

bool inRange(const std::vector<int>& v, int bound) {
  return std::all_of(v.begin(), v.end(),
                     [bound](int x) { return x >= 0 && x < bound; });
}

}  // namespace

Pseudofunctor identity_functor(const FiniteBicategory& B) {
  Pseudofunctor F;
  F.name = "id-" + B.name;
  F.objMap.resize(B.objects.size());
  F.arrMap.resize(B.arrows.size());
  F.cellMap.resize(B.cells.size());
  for (size_t i = 0; i < F.objMap.size(); ++i) F.objMap[i] = static_cast<int>(i);
  for (size_t i = 0; i < F.arrMap.size(); ++i) F.arrMap[i] = static_cast<int>(i);
  for (size_t i = 0; i < F.cellMap.size(); ++i)
    F.cellMap[i] = static_cast<int>(i);
  fill_strict_mediators(B, B, F);
  return F;
}

void fill_strict_mediators(const FiniteBicategory& C,
                           const FiniteBicategory& D, Pseudofunctor& F) {
  F.xi.assign(C.objects.size(), -1);
  for (size_t x = 0; x < C.objects.size(); ++x) {
    int fx = mapAt(F.objMap, static_cast<int>(x));
    if (fx >= 0) F.xi[x] = D.idCell[D.idArrow[fx]];
  }
  F.phi.clear();
  int nA = static_cast<int>(C.arrows.size());
  for (int g = 0; g < nA; ++g)
    for (int f = 0; f < nA; ++f) {
      if (C.harr(g, f) == -1) continue;
      int img = D.harr(mapAt(F.arrMap, g), mapAt(F.arrMap, f));
      F.phi[{g, f}] = img == -1 ? -1 : D.idCell[img];
    }
}

bool is_strict(const FiniteBicategory& C, const FiniteBicategory& D,
               const Pseudofunctor& F) {
  if (F.objMap.size() != C.objects.size() ||
      F.arrMap.size() != C.arrows.size() || F.xi.size() != C.objects.size())
    return false;
  if (!inRange(F.objMap, static_cast<int>(D.objects.size())) ||
      !inRange(F.arrMap, static_cast<int>(D.arrows.size())))
    return false;
  for (size_t x = 0; x < C.objects.size(); ++x) {
    int idImg = F.arrMap[C.idArrow[x]];
    if (idImg != D.idArrow[F.objMap[x]]) return false;
    if (F.xi[x] != D.idCell[idImg]) return false;
  }
  int nA = static_cast<int>(C.arrows.size());
  for (int g = 0; g < nA; ++g)
    for (int f = 0; f < nA; ++f) {
      int gf = C.harr(g, f);
      if (gf == -1) continue;
      int img = D.harr(F.arrMap[g], F.arrMap[f]);
      if (img == -1 || img != F.arrMap[gf]) return false;
      if (phiAt(F.phi, g, f) != D.idCell[img]) return false;
    }
  return true;
}

Pseudofunctor compose_functors(const FiniteBicategory& C,
                               const FiniteBicategory&,
                               const FiniteBicategory& E,
                               const Pseudofunctor& G,
                               const Pseudofunctor& F) {
  Pseudofunctor H;
  H.name = G.name + " after " + F.name;
  H.objMap.resize(C.objects.size(), -1);
  H.arrMap.resize(C.arrows.size(), -1);
  H.cellMap.resize(C.cells.size(), -1);
  for (size_t x = 0; x < H.objMap.size(); ++x)
    H.objMap[x] = mapAt(G.objMap, mapAt(F.objMap, static_cast<int>(x)));
  for (size_t f = 0; f < H.arrMap.size(); ++f)
    H.arrMap[f] = mapAt(G.arrMap, mapAt(F.arrMap, static_cast<int>(f)));
  for (size_t a = 0; a < H.cellMap.size(); ++a)
    H.cellMap[a] = mapAt(G.cellMap, mapAt(F.cellMap, static_cast<int>(a)));
  H.xi.assign(C.objects.size(), -1);
  for (size_t x = 0; x < C.objects.size(); ++x) {
    int fx = mapAt(F.objMap, static_cast<int>(x));
    int step = mapAt(G.xi, fx);
    int lifted = mapAt(G.cellMap, mapAt(F.xi, static_cast<int>(x)));
    if (step != -1 && lifted != -1) H.xi[x] = E.vcomp(lifted, step);
  }
  for (const auto& [pair, cell] : F.phi) {
    int step = phiAt(G.phi, mapAt(F.arrMap, pair.first),
                     mapAt(F.arrMap, pair.second));
    int lifted = mapAt(G.cellMap, cell);
    H.phi[pair] = (step == -1 || lifted == -1) ? -1 : E.vcomp(lifted, step);
  }
  return H;
}

AxiomReport check_pseudofunctor(const FiniteBicategory& C,
                                  const FiniteBicategory& D,
                                  const Pseudofunctor& F) {
  AxiomReport r;
  int nO = static_cast<int>(C.objects.size());
  int nA = static_cast<int>(C.arrows.size());
  int nC = static_cast<int>(C.cells.size());

  if (F.objMap.size() != C.objects.size())
    r.problems.push_back("object map is not total on the source");
  if (F.arrMap.size() != C.arrows.size())
    r.problems.push_back("arrow map is not total on the source");
  if (F.cellMap.size() != C.cells.size())
    r.problems.push_back("cell map is not total on the source");
  if (F.xi.size() != C.objects.size())
    r.problems.push_back("xi is not indexed by the source objects");
  if (!r.problems.empty()) return r;

  if (!inRange(F.objMap, static_cast<int>(D.objects.size())) ||
      !inRange(F.arrMap, static_cast<int>(D.arrows.size())) ||
      !inRange(F.cellMap, static_cast<int>(D.cells.size())) ||
      !inRange(F.xi, static_cast<int>(D.cells.size()))) {
    r.problems.push_back("a map entry is outside the target's id range");
    return r;
  }
  for (const auto& [pair, cell] : F.phi)
    if (cell < 0 || cell >= static_cast<int>(D.cells.size())) {
      r.problems.push_back("a phi entry is outside the target's id range");
      return r;
    }

  for (int f = 0; f < nA; ++f) {
    const FBArrow& a = C.arrows[f];
    const FBArrow& img = D.arrows[F.arrMap[f]];
    if (img.src != F.objMap[a.src] || img.dst != F.objMap[a.dst])
      r.problems.push_back("arrow " + a.name + ": image boundary mismatch");
  }
  for (int a = 0; a < nC; ++a) {
    const FBCell& cell = C.cells[a];
    const FBCell& img = D.cells[F.cellMap[a]];
    if (img.src != F.arrMap[cell.src] || img.dst != F.arrMap[cell.dst])
      r.problems.push_back("cell " + cell.name + ": image boundary mismatch");
  }
  for (int x = 0; x < nO; ++x) {
    const FBCell& cell = D.cells[F.xi[x]];
    if (cell.src != D.idArrow[F.objMap[x]] || cell.dst != F.arrMap[C.idArrow[x]])
      r.problems.push_back("xi at " + C.objects[x] + ": boundary mismatch");
    else if (!D.cellInvertible(F.xi[x]))
      r.problems.push_back("xi at " + C.objects[x] + ": not invertible");
  }
  for (int g = 0; g < nA; ++g)
    for (int f = 0; f < nA; ++f) {
      int gf = C.harr(g, f);
      if (gf == -1) continue;
      int cell = phiAt(F.phi, g, f);
      std::string where =
          "phi at (" + C.arrows[g].name + ", " + C.arrows[f].name + ")";
      if (cell == -1) {
        r.problems.push_back(where + ": missing");
        continue;
      }
      int whole = D.harr(F.arrMap[g], F.arrMap[f]);
      if (whole == -1 || D.cells[cell].src != whole ||
          D.cells[cell].dst != F.arrMap[gf])
        r.problems.push_back(where + ": boundary mismatch");
      else if (!D.cellInvertible(cell))
        r.problems.push_back(where + ": not invertible");
    }
  for (const auto& [pair, cell] : F.phi)
    if (C.harr(pair.first, pair.second) == -1)
      r.problems.push_back("phi entry on the non-composable pair (" +
                           C.arrows[pair.first].name + ", " +
                           C.arrows[pair.second].name + ")");

  AxiomRun funct("functoriality");
  for (int f = 0; f < nA; ++f) {
    std::string desc = "identity cell on " + C.arrows[f].name;
    bool pass = sidesAgree(F.cellMap[C.idCell[f]], D.idCell[F.arrMap[f]], &desc);
    funct.instance(pass, desc);
  }
  for (int b = 0; b < nC; ++b)
    for (int a = 0; a < nC; ++a) {
      int ba = C.vcomp(b, a);
      if (ba == -1) continue;
      std::string desc =
          "composite b=" + C.cells[b].name + " a=" + C.cells[a].name;
      bool pass = sidesAgree(F.cellMap[ba],
                             D.vcomp(F.cellMap[b], F.cellMap[a]), &desc);
      funct.instance(pass, desc);
    }
  r.axioms.push_back(funct.check);

  AxiomRun p1("P1");
  AxiomRun p2("P2");
  for (int f = 0; f < nA; ++f) {
    int ff = F.arrMap[f];
    int x = C.arrows[f].src;
    int y = C.arrows[f].dst;
    std::string desc = "arrow f=" + C.arrows[f].name;
    int lhs = D.vcomp(phiAt(F.phi, f, C.idArrow[x]),
                      D.hcell(D.idCell[ff], F.xi[x]));
    p1.instance(sidesAgree(lhs, D.idCell[ff], &desc), desc);
    desc = "arrow f=" + C.arrows[f].name;
    lhs = D.vcomp(phiAt(F.phi, C.idArrow[y], f),
                  D.hcell(F.xi[y], D.idCell[ff]));
    p2.instance(sidesAgree(lhs, D.idCell[ff], &desc), desc);
  }
  r.axioms.push_back(p1.check);
  r.axioms.push_back(p2.check);

  AxiomRun p3("P3");
  for (int h = 0; h < nA; ++h)
    for (int g = 0; g < nA; ++g) {
      int hg = C.harr(h, g);
      if (hg == -1) continue;
      for (int f = 0; f < nA; ++f) {
        int gf = C.harr(g, f);
        if (gf == -1) continue;
        std::string desc = "triple h=" + C.arrows[h].name +
                           " g=" + C.arrows[g].name + " f=" + C.arrows[f].name;
        int lhs = D.vcomp(phiAt(F.phi, hg, f),
                          D.hcell(phiAt(F.phi, h, g), D.idCell[F.arrMap[f]]));
        int rhs = D.vcomp(phiAt(F.phi, h, gf),
                          D.hcell(D.idCell[F.arrMap[h]], phiAt(F.phi, g, f)));
        p3.instance(sidesAgree(lhs, rhs, &desc), desc);
      }
    }
  r.axioms.push_back(p3.check);

  AxiomRun nphi("Nphi");
  for (int be = 0; be < nC; ++be)
    for (int al = 0; al < nC; ++al) {
      int both = C.hcell(be, al);
      if (both == -1) continue;
      std::string desc =
          "pair beta=" + C.cells[be].name + " alpha=" + C.cells[al].name;
      int lhs = D.vcomp(F.cellMap[both],
                        phiAt(F.phi, C.cells[be].src, C.cells[al].src));
      int rhs = D.vcomp(phiAt(F.phi, C.cells[be].dst, C.cells[al].dst),
                        D.hcell(F.cellMap[be], F.cellMap[al]));
      nphi.instance(sidesAgree(lhs, rhs, &desc), desc);
    }
  r.axioms.push_back(nphi.check);

  return r;
}

std::vector<Pseudofunctor> enumerate_strict_functors(
    const FiniteBicategory& C, const FiniteBicategory& D) {
  std::vector<Pseudofunctor> out;
  int nO = static_cast<int>(C.objects.size());
  int nA = static_cast<int>(C.arrows.size());
  int nC = static_cast<int>(C.cells.size());

  std::vector<int> arrIsId(nA, -1);
  for (int x = 0; x < nO; ++x) arrIsId[C.idArrow[x]] = x;
  std::vector<int> cellIsId(nC, -1);
  for (int f = 0; f < nA; ++f) cellIsId[C.idCell[f]] = f;

  // Runs fn on every pick from the per-slot candidate lists, in
  // lexicographic order.
  auto forEachPick = [](const std::vector<std::vector<int>>& cand,
                        auto&& fn) {
    std::vector<int> pick(cand.size());
    size_t n = cand.size();
    std::vector<size_t> idx(n, 0);
    for (const auto& slot : cand)
      if (slot.empty()) return;
    while (true) {
      for (size_t i = 0; i < n; ++i) pick[i] = cand[i][idx[i]];
      fn(pick);
      size_t i = n;
      while (i > 0) {
        --i;
        if (++idx[i] < cand[i].size()) break;
        idx[i] = 0;
        if (i == 0) return;
      }
      if (n == 0) return;
    }
  };

  std::vector<std::vector<int>> objCand(
      nO, [&] {
        std::vector<int> all(D.objects.size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        return all;
      }());

  forEachPick(objCand, [&](const std::vector<int>& objMap) {
    std::vector<std::vector<int>> arrCand(nA);
    for (int f = 0; f < nA; ++f) {
      if (arrIsId[f] >= 0) {
        arrCand[f] = {D.idArrow[objMap[arrIsId[f]]]};
        continue;
      }
      int sx = objMap[C.arrows[f].src];
      int dx = objMap[C.arrows[f].dst];
      for (size_t d = 0; d < D.arrows.size(); ++d)
        if (D.arrows[d].src == sx && D.arrows[d].dst == dx)
          arrCand[f].push_back(static_cast<int>(d));
    }
    forEachPick(arrCand, [&](const std::vector<int>& arrMap) {
      for (int g = 0; g < nA; ++g)
        for (int f = 0; f < nA; ++f) {
          int gf = C.harr(g, f);
          if (gf == -1) continue;
          if (D.harr(arrMap[g], arrMap[f]) != arrMap[gf]) return;
        }
      std::vector<std::vector<int>> cellCand(nC);
      for (int a = 0; a < nC; ++a) {
        if (cellIsId[a] >= 0) {
          cellCand[a] = {D.idCell[arrMap[cellIsId[a]]]};
          continue;
        }
        int sf = arrMap[C.cells[a].src];
        int df = arrMap[C.cells[a].dst];
        for (size_t d = 0; d < D.cells.size(); ++d)
          if (D.cells[d].src == sf && D.cells[d].dst == df)
            cellCand[a].push_back(static_cast<int>(d));
      }
      forEachPick(cellCand, [&](const std::vector<int>& cellMap) {
        for (int b = 0; b < nC; ++b)
          for (int a = 0; a < nC; ++a) {
            int ba = C.vcomp(b, a);
            if (ba != -1 && D.vcomp(cellMap[b], cellMap[a]) != cellMap[ba])
              return;
            int hba = C.hcell(b, a);
            if (hba != -1 && D.hcell(cellMap[b], cellMap[a]) != cellMap[hba])
              return;
          }
        Pseudofunctor F;
        F.name = C.name + "-to-" + D.name + "-" +
                 std::to_string(out.size());
        F.objMap = objMap;
        F.arrMap = arrMap;
        F.cellMap = cellMap;
        fill_strict_mediators(C, D, F);
        out.push_back(std::move(F));
      });
    });
  });
  return out;
}

PseudonaturalTransformation identity_transformation(
    const FiniteBicategory& C, const FiniteBicategory& D,
    const Pseudofunctor& F) {
  PseudonaturalTransformation t;
  t.name = "id-on-" + F.name;
  t.thetaX.resize(C.objects.size(), -1);
  t.thetaF.resize(C.arrows.size(), -1);
  for (size_t x = 0; x < C.objects.size(); ++x)
    t.thetaX[x] = D.idArrow[mapAt(F.objMap, static_cast<int>(x))];
  for (size_t f = 0; f < C.arrows.size(); ++f)
    t.thetaF[f] = D.idCell[mapAt(F.arrMap, static_cast<int>(f))];
  return t;
}

TransformationReport check_pseudonatural(
    const FiniteBicategory& C, const FiniteBicategory& D,
    const Pseudofunctor& F, const Pseudofunctor& G,
    const PseudonaturalTransformation& t) {
  TransformationReport out;
  AxiomReport& r = out.checks;
  int nO = static_cast<int>(C.objects.size());
  int nA = static_cast<int>(C.arrows.size());
  int nC = static_cast<int>(C.cells.size());

  if (F.objMap.size() != C.objects.size() ||
      G.objMap.size() != C.objects.size() ||
      F.arrMap.size() != C.arrows.size() ||
      G.arrMap.size() != C.arrows.size() ||
      F.cellMap.size() != C.cells.size() ||
      G.cellMap.size() != C.cells.size()) {
    r.problems.push_back("endpoint functor maps are not total on the source");
    return out;
  }
  if (t.thetaX.size() != C.objects.size()) {
    r.problems.push_back("components are not indexed by the source objects");
    return out;
  }
  if (t.thetaF.size() != C.arrows.size()) {
    r.problems.push_back("arrow components are not indexed by the source arrows");
    return out;
  }
  if (!inRange(t.thetaX, static_cast<int>(D.arrows.size())) ||
      !inRange(t.thetaF, static_cast<int>(D.cells.size()))) {
    r.problems.push_back("a component is outside the target's id range");
    return out;
  }

  for (int x = 0; x < nO; ++x) {
    const FBArrow& comp = D.arrows[t.thetaX[x]];
    if (comp.src != F.objMap[x] || comp.dst != G.objMap[x])
      r.problems.push_back("component at " + C.objects[x] +
                           ": not an arrow from the image under the source "
                           "functor to the image under the target one");
  }
  for (int f = 0; f < nA; ++f) {
    const FBArrow& a = C.arrows[f];
    const FBCell& cell = D.cells[t.thetaF[f]];
    int want_src = D.harr(G.arrMap[f], t.thetaX[a.src]);
    int want_dst = D.harr(t.thetaX[a.dst], F.arrMap[f]);
    if (want_src == -1 || want_dst == -1 || cell.src != want_src ||
        cell.dst != want_dst)
      r.problems.push_back("component at arrow " + a.name +
                           ": boundary mismatch");
    else if (!D.cellInvertible(t.thetaF[f]))
      r.problems.push_back("component at arrow " + a.name +
                           ": not invertible");
  }

  AxiomRun pn0("PN0");
  for (int x = 0; x < nO; ++x) {
    std::string desc = "object X=" + C.objects[x];
    int th = t.thetaX[x];
    int lhs = D.hcell(D.idCell[th], F.xi[x]);
    int rhs = D.vcomp(t.thetaF[C.idArrow[x]],
                      D.hcell(G.xi[x], D.idCell[th]));
    pn0.instance(sidesAgree(lhs, rhs, &desc), desc);
  }
  r.axioms.push_back(pn0.check);

  AxiomRun pn1("PN1");
  for (int g = 0; g < nA; ++g)
    for (int f = 0; f < nA; ++f) {
      int gf = C.harr(g, f);
      if (gf == -1) continue;
      std::string desc =
          "pair g=" + C.arrows[g].name + " f=" + C.arrows[f].name;
      int x = C.arrows[f].src;
      int z = C.arrows[g].dst;
      int lower = D.vcomp(D.hcell(t.thetaF[g], D.idCell[F.arrMap[f]]),
                          D.hcell(D.idCell[G.arrMap[g]], t.thetaF[f]));
      int lhs = D.vcomp(D.hcell(D.idCell[t.thetaX[z]], phiAt(F.phi, g, f)),
                        lower);
      int rhs = D.vcomp(t.thetaF[gf],
                        D.hcell(phiAt(G.phi, g, f), D.idCell[t.thetaX[x]]));
      pn1.instance(sidesAgree(lhs, rhs, &desc), desc);
    }
  r.axioms.push_back(pn1.check);

  AxiomRun pn2("PN2");
  for (int al = 0; al < nC; ++al) {
    const FBCell& cell = C.cells[al];
    std::string desc = "cell alpha=" + cell.name;
    int x = C.arrows[cell.src].src;
    int y = C.arrows[cell.src].dst;
    int lhs = D.vcomp(t.thetaF[cell.dst],
                      D.hcell(G.cellMap[al], D.idCell[t.thetaX[x]]));
    int rhs = D.vcomp(D.hcell(D.idCell[t.thetaX[y]], F.cellMap[al]),
                      t.thetaF[cell.src]);
    pn2.instance(sidesAgree(lhs, rhs, &desc), desc);
  }
  r.axioms.push_back(pn2.check);

  out.equivalence = true;
  out.equivalenceNote = "every component is an equivalence";
  for (int x = 0; x < nO; ++x)
    if (!find_equivalence_witness(D, t.thetaX[x])) {
      out.equivalence = false;
      out.equivalenceNote =
          "component at " + C.objects[x] + " is not an equivalence";
      break;
    }
  return out;
}

AxiomReport check_modification(const FiniteBicategory& C,
                                 const FiniteBicategory& D,
                                 const Pseudofunctor& F,
                                 const Pseudofunctor& G,
                                 const PseudonaturalTransformation& theta,
                                 const PseudonaturalTransformation& eta,
                                 const Modification& rho) {
  AxiomReport r;
  int nO = static_cast<int>(C.objects.size());
  int nA = static_cast<int>(C.arrows.size());

  if (rho.rhoX.size() != C.objects.size()) {
    r.problems.push_back("components are not indexed by the source objects");
    return r;
  }
  if (theta.thetaX.size() != C.objects.size() ||
      eta.thetaX.size() != C.objects.size() ||
      theta.thetaF.size() != C.arrows.size() ||
      eta.thetaF.size() != C.arrows.size()) {
    r.problems.push_back("endpoint transformations are not total on the source");
    return r;
  }
  if (!inRange(rho.rhoX, static_cast<int>(D.cells.size()))) {
    r.problems.push_back("a component is outside the target's id range");
    return r;
  }

  for (int x = 0; x < nO; ++x) {
    const FBCell& cell = D.cells[rho.rhoX[x]];
    if (cell.src != theta.thetaX[x] || cell.dst != eta.thetaX[x])
      r.problems.push_back("component at " + C.objects[x] +
                           ": boundary does not run from the first "
                           "transformation's component to the second's");
  }

  AxiomRun pm("PM");
  for (int f = 0; f < nA; ++f) {
    const FBArrow& a = C.arrows[f];
    std::string desc = "arrow f=" + a.name;
    int lhs = D.vcomp(D.hcell(rho.rhoX[a.dst], D.idCell[mapAt(F.arrMap, f)]),
                      mapAt(theta.thetaF, f));
    int rhs = D.vcomp(mapAt(eta.thetaF, f),
                      D.hcell(D.idCell[mapAt(G.arrMap, f)], rho.rhoX[a.src]));
    pm.instance(sidesAgree(lhs, rhs, &desc), desc);
  }
  r.axioms.push_back(pm.check);
  return r;
}

FreePseudofunctor strict_free_functor(const Computad& c,
                                      const FiniteBicategory& D,
                                      std::vector<int> objMap,
                                      std::vector<int> arrMap,
                                      std::vector<int> cellMap,
                                      std::string name) {
  FreePseudofunctor F;
  F.name = std::move(name);
  F.objMap = std::move(objMap);
  F.arrMap = std::move(arrMap);
  F.cellMap = std::move(cellMap);
  F.xi.assign(c.objects.size(), -1);
  for (size_t x = 0; x < c.objects.size(); ++x) {
    int fx = mapAt(F.objMap, static_cast<int>(x));
    if (fx >= 0) F.xi[x] = D.idCell[D.idArrow[fx]];
  }
  for (size_t g = 0; g < c.gen1.size(); ++g)
    for (size_t h = 0; h < c.gen1.size(); ++h) {
      if (c.gen1[g].src != c.gen1[h].dst) continue;
      int img = D.harr(mapAt(F.arrMap, static_cast<int>(g)),
                       mapAt(F.arrMap, static_cast<int>(h)));
      F.phi[{static_cast<int>(g), static_cast<int>(h)}] =
          img == -1 ? -1 : D.idCell[img];
    }
  return F;
}

int functor_arrow(const Computad& c, const FiniteBicategory& D,
                  const FreePseudofunctor& F, const Path& p) {
  if (p.src < 0 || p.src >= static_cast<int>(F.objMap.size()) ||
      F.objMap[p.src] < 0)
    throw std::runtime_error("functor image: unmapped object");
  int acc = D.idArrow[F.objMap[p.src]];
  for (size_t i = p.gens.size(); i > 0; --i) {
    int img = mapAt(F.arrMap, p.gens[i - 1]);
    if (img == -1)
      throw std::runtime_error("functor image: unmapped 1-generator " +
                               c.gen1[p.gens[i - 1]].name);
    acc = D.harr(img, acc);
    if (acc == -1)
      throw std::runtime_error("functor image: arrow images do not compose");
  }
  return acc;
}

int word_mediator(const Computad& c, const FiniteBicategory& D,
                  const FreePseudofunctor& F, const Path& p) {
  if (p.empty()) {
    int cell = mapAt(F.xi, p.src);
    if (cell == -1) throw std::runtime_error("functor image: missing xi");
    return cell;
  }
  if (p.size() == 1) return D.idCell[functor_arrow(c, D, F, p)];
  Path rest = subPath(c, p, 1, p.size());
  int inner = D.hcell(D.idCell[mapAt(F.arrMap, p.gens[0])],
                      word_mediator(c, D, F, rest));
  int pairCell = phiAt(F.phi, p.gens[0], p.gens[1]);
  if (pairCell == -1)
    throw std::runtime_error("functor image: missing mediator for (" +
                             c.gen1[p.gens[0]].name + ", " +
                             c.gen1[p.gens[1]].name + ")");
  Path tail = subPath(c, p, 2, p.size());
  int step = D.hcell(pairCell, D.idCell[functor_arrow(c, D, F, tail)]);
  int med = D.vcomp(step, inner);
  if (med == -1)
    throw std::runtime_error("functor image: mediator does not compose");
  return med;
}

namespace {

int layerImage(const Computad& c, const FiniteBicategory& D,
               const FreePseudofunctor& F, const Layer& l) {
  if (l.gen < 0) return D.idCell[functor_arrow(c, D, F, layerSrc(c, l))];
  int base = mapAt(F.cellMap, l.gen);
  if (base == -1)
    throw std::runtime_error("functor image: unmapped 2-generator " +
                             c.gen2[l.gen].name);
  if (l.inverse) {
    auto inv = D.inverseCell(base);
    if (!inv)
      throw std::runtime_error("functor image: inverse layer on " +
                               c.gen2[l.gen].name +
                               " but its image is not invertible");
    base = *inv;
  }
  int withRight = D.hcell(base, D.idCell[functor_arrow(c, D, F, l.right)]);
  return D.hcell(D.idCell[functor_arrow(c, D, F, l.left)], withRight);
}

}  // namespace

int evaluate_functor(const Computad& c, const FiniteBicategory& D,
                     const FreePseudofunctor& F, const Term& t) {
  int stack = D.idCell[functor_arrow(c, D, F, t.src)];
  for (const Layer& l : t.layers) {
    stack = D.vcomp(layerImage(c, D, F, l), stack);
    if (stack == -1)
      throw std::runtime_error("functor image: layers do not stack");
  }
  int srcMed = word_mediator(c, D, F, t.src);
  auto srcMedInv = D.inverseCell(srcMed);
  if (!srcMedInv)
    throw std::runtime_error("functor image: boundary mediator not invertible");
  int img = D.vcomp(word_mediator(c, D, F, t.dst),
                    D.vcomp(stack, *srcMedInv));
  if (img == -1)
    throw std::runtime_error("functor image: mediators do not stack");
  return img;
}

AxiomReport check_free_functor(const PresentedBicategory& P,
                                 const FiniteBicategory& D,
                                 const FreePseudofunctor& F) {
  AxiomReport r;
  const Computad& c = P.computad;

  if (F.objMap.size() != c.objects.size() ||
      F.arrMap.size() != c.gen1.size() || F.cellMap.size() != c.gen2.size() ||
      F.xi.size() != c.objects.size()) {
    r.problems.push_back("generator maps are not total on the source");
    return r;
  }
  if (!inRange(F.objMap, static_cast<int>(D.objects.size())) ||
      !inRange(F.arrMap, static_cast<int>(D.arrows.size())) ||
      !inRange(F.cellMap, static_cast<int>(D.cells.size())) ||
      !inRange(F.xi, static_cast<int>(D.cells.size()))) {
    r.problems.push_back("a map entry is outside the target's id range");
    return r;
  }

  for (size_t g = 0; g < c.gen1.size(); ++g) {
    const FBArrow& img = D.arrows[F.arrMap[g]];
    if (img.src != F.objMap[c.gen1[g].src] ||
        img.dst != F.objMap[c.gen1[g].dst])
      r.problems.push_back("1-generator " + c.gen1[g].name +
                           ": image boundary mismatch");
  }
  for (size_t x = 0; x < c.objects.size(); ++x) {
    const FBCell& cell = D.cells[F.xi[x]];
    int idArr = D.idArrow[F.objMap[x]];
    if (cell.src != idArr || cell.dst != idArr)
      r.problems.push_back("xi at " + c.objects[x] +
                           ": not an automorphism of the identity arrow");
    else if (!D.cellInvertible(F.xi[x]))
      r.problems.push_back("xi at " + c.objects[x] + ": not invertible");
  }
  for (size_t g = 0; g < c.gen1.size(); ++g)
    for (size_t h = 0; h < c.gen1.size(); ++h) {
      if (c.gen1[g].src != c.gen1[h].dst) continue;
      int cell = phiAt(F.phi, static_cast<int>(g), static_cast<int>(h));
      std::string where =
          "mediator at (" + c.gen1[g].name + ", " + c.gen1[h].name + ")";
      if (cell == -1) {
        r.problems.push_back(where + ": missing");
        continue;
      }
      int whole = D.harr(F.arrMap[g], F.arrMap[h]);
      if (cell < 0 || cell >= static_cast<int>(D.cells.size()) ||
          whole == -1 || D.cells[cell].src != whole ||
          D.cells[cell].dst != whole)
        r.problems.push_back(where + ": not an automorphism of the composite");
      else if (!D.cellInvertible(cell))
        r.problems.push_back(where + ": not invertible");
    }
  bool cellsOk = true;
  for (size_t a = 0; a < c.gen2.size(); ++a) {
    const Gen2& gen = c.gen2[a];
    const FBCell& img = D.cells[F.cellMap[a]];
    int wantSrc = -1;
    int wantDst = -1;
    try {
      wantSrc = functor_arrow(c, D, F, gen.src);
      wantDst = functor_arrow(c, D, F, gen.dst);
    } catch (const std::runtime_error&) {
    }
    if (img.src != wantSrc || img.dst != wantDst) {
      r.problems.push_back("2-generator " + gen.name +
                           ": image boundary mismatch");
      cellsOk = false;
    } else if (gen.invertible && !D.cellInvertible(F.cellMap[a])) {
      r.problems.push_back("2-generator " + gen.name +
                           ": invertible but its image is not");
      cellsOk = false;
    }
  }
  if (!r.problems.empty() && !cellsOk) return r;

  AxiomRun rel("relations");
  for (size_t i = 0; i < P.relations.size(); ++i) {
    std::string desc = "relation " + std::to_string(i);
    int lhs = -1;
    int rhs = -1;
    try {
      lhs = evaluate_functor(c, D, F, P.relations[i].first);
      rhs = evaluate_functor(c, D, F, P.relations[i].second);
    } catch (const std::runtime_error& e) {
      desc += std::string(": ") + e.what();
    }
    rel.instance(sidesAgree(lhs, rhs, &desc), desc);
  }
  r.axioms.push_back(rel.check);
  return r;
}

}  // namespace hocat
