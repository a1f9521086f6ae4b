#include "hocat/finite_bicat.hpp"

#include <algorithm>

namespace hocat {

namespace {

int lookup(const std::vector<std::vector<int>>& table, int i, int j) {
  if (i < 0 || j < 0) return -1;
  if (static_cast<size_t>(i) >= table.size()) return -1;
  if (static_cast<size_t>(j) >= table[i].size()) return -1;
  return table[i][j];
}

}  // namespace

int FiniteBicategory::objId(const std::string& n) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == n) return static_cast<int>(i);
  return -1;
}

int FiniteBicategory::arrowId(const std::string& n) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == n) return static_cast<int>(i);
  return -1;
}

int FiniteBicategory::cellId(const std::string& n) const {
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i].name == n) return static_cast<int>(i);
  return -1;
}

int FiniteBicategory::vcomp(int b, int a) const { return lookup(vcompT, b, a); }
int FiniteBicategory::harr(int l, int r) const { return lookup(harrT, l, r); }
int FiniteBicategory::hcell(int l, int r) const { return lookup(hcellT, l, r); }

int FiniteBicategory::whiskerArrowCell(int g, int a) const {
  if (g < 0 || static_cast<size_t>(g) >= arrows.size()) return -1;
  return hcell(idCell[g], a);
}

int FiniteBicategory::whiskerCellArrow(int a, int f) const {
  if (f < 0 || static_cast<size_t>(f) >= arrows.size()) return -1;
  return hcell(a, idCell[f]);
}

std::vector<int> FiniteBicategory::homArrows(int x, int y) const {
  std::vector<int> out;
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].src == x && arrows[i].dst == y)
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> FiniteBicategory::homCells(int f, int g) const {
  std::vector<int> out;
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i].src == f && cells[i].dst == g)
      out.push_back(static_cast<int>(i));
  return out;
}

std::optional<int> FiniteBicategory::inverseCell(int a) const {
  if (a < 0 || static_cast<size_t>(a) >= cells.size()) return std::nullopt;
  int f = cells[a].src;
  int g = cells[a].dst;
  for (int b : homCells(g, f))
    if (vcomp(b, a) == idCell[f] && vcomp(a, b) == idCell[g]) return b;
  return std::nullopt;
}

bool FiniteBicategory::arrowsParallel(int f, int g) const {
  if (f < 0 || g < 0) return false;
  if (static_cast<size_t>(f) >= arrows.size()) return false;
  if (static_cast<size_t>(g) >= arrows.size()) return false;
  return arrows[f].src == arrows[g].src && arrows[f].dst == arrows[g].dst;
}

std::string FiniteBicategory::describeArrow(int f) const {
  if (f < 0 || static_cast<size_t>(f) >= arrows.size()) return "<bad arrow>";
  const FBArrow& a = arrows[f];
  return a.name + ": " + objects[a.src] + " -> " + objects[a.dst];
}

std::string FiniteBicategory::describeCell(int a) const {
  if (a < 0 || static_cast<size_t>(a) >= cells.size()) return "<bad cell>";
  const FBCell& c = cells[a];
  return c.name + ": " + arrows[c.src].name + " => " + arrows[c.dst].name;
}

bool FiniteBicategory::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  size_t no = objects.size(), na = arrows.size(), nc = cells.size();
  for (const FBArrow& a : arrows) {
    if (a.src < 0 || static_cast<size_t>(a.src) >= no || a.dst < 0 ||
        static_cast<size_t>(a.dst) >= no)
      return fail("arrow " + a.name + " has a bad endpoint");
  }
  for (const FBCell& c : cells) {
    if (c.src < 0 || static_cast<size_t>(c.src) >= na || c.dst < 0 ||
        static_cast<size_t>(c.dst) >= na)
      return fail("cell " + c.name + " has a bad boundary arrow");
    if (!arrowsParallel(c.src, c.dst))
      return fail("cell " + c.name + " is not between parallel arrows");
  }
  if (idArrow.size() != no) return fail("idArrow table has the wrong size");
  for (size_t x = 0; x < no; ++x) {
    int f = idArrow[x];
    if (f < 0 || static_cast<size_t>(f) >= na)
      return fail("identity arrow of " + objects[x] + " is out of range");
    if (arrows[f].src != static_cast<int>(x) ||
        arrows[f].dst != static_cast<int>(x))
      return fail("identity arrow of " + objects[x] + " is not an endoarrow");
  }
  if (idCell.size() != na) return fail("idCell table has the wrong size");
  for (size_t f = 0; f < na; ++f) {
    int a = idCell[f];
    if (a < 0 || static_cast<size_t>(a) >= nc)
      return fail("identity cell of " + arrows[f].name + " is out of range");
    if (cells[a].src != static_cast<int>(f) ||
        cells[a].dst != static_cast<int>(f))
      return fail("identity cell of " + arrows[f].name +
                  " has the wrong boundary");
  }
  if (vcompT.size() != nc || harrT.size() != na || hcellT.size() != nc)
    return fail("a composition table has the wrong outer size");
  for (size_t b = 0; b < nc; ++b) {
    if (vcompT[b].size() != nc)
      return fail("vcomp row " + cells[b].name + " has the wrong size");
    for (size_t a = 0; a < nc; ++a) {
      bool composable = cells[b].src == cells[a].dst;
      int r = vcompT[b][a];
      if (!composable && r != -1)
        return fail("vcomp defined on the non-composable pair (" +
                    cells[b].name + ", " + cells[a].name + ")");
      if (composable) {
        if (r < 0 || static_cast<size_t>(r) >= nc)
          return fail("vcomp missing at (" + cells[b].name + ", " +
                      cells[a].name + ")");
        if (cells[r].src != cells[a].src || cells[r].dst != cells[b].dst)
          return fail("vcomp boundary wrong at (" + cells[b].name + ", " +
                      cells[a].name + ")");
      }
    }
  }
  for (size_t l = 0; l < na; ++l) {
    if (harrT[l].size() != na)
      return fail("arrow composition row " + arrows[l].name +
                  " has the wrong size");
    for (size_t r = 0; r < na; ++r) {
      bool composable = arrows[l].src == arrows[r].dst;
      int g = harrT[l][r];
      if (!composable && g != -1)
        return fail("arrow composition defined on the non-composable pair (" +
                    arrows[l].name + ", " + arrows[r].name + ")");
      if (composable) {
        if (g < 0 || static_cast<size_t>(g) >= na)
          return fail("arrow composition missing at (" + arrows[l].name +
                      ", " + arrows[r].name + ")");
        if (arrows[g].src != arrows[r].src || arrows[g].dst != arrows[l].dst)
          return fail("arrow composition boundary wrong at (" +
                      arrows[l].name + ", " + arrows[r].name + ")");
      }
    }
  }
  for (size_t l = 0; l < nc; ++l) {
    if (hcellT[l].size() != nc)
      return fail("horizontal cell row " + cells[l].name +
                  " has the wrong size");
    for (size_t r = 0; r < nc; ++r) {
      bool composable =
          arrows[cells[l].src].src == arrows[cells[r].src].dst;
      int x = hcellT[l][r];
      if (!composable && x != -1)
        return fail("horizontal composition defined on the non-composable "
                    "pair (" +
                    cells[l].name + ", " + cells[r].name + ")");
      if (composable) {
        if (x < 0 || static_cast<size_t>(x) >= nc)
          return fail("horizontal composition missing at (" + cells[l].name +
                      ", " + cells[r].name + ")");
        int wantSrc = harr(cells[l].src, cells[r].src);
        int wantDst = harr(cells[l].dst, cells[r].dst);
        if (cells[x].src != wantSrc || cells[x].dst != wantDst)
          return fail("horizontal composition boundary wrong at (" +
                      cells[l].name + ", " + cells[r].name + ")");
      }
    }
  }
  return true;
}

CheckReport check_bicategory(const FiniteBicategory& B) {
  CheckReport rep;
  std::string why;
  if (!B.validate(&why)) {
    rep.problems.push_back("tables: " + why);
    return rep;
  }
  size_t na = B.arrows.size(), nc = B.cells.size();

  // Hom-categories: units and associativity of vertical composition.
  for (size_t a = 0; a < nc; ++a) {
    int f = B.cells[a].src, g = B.cells[a].dst;
    if (B.vcomp(static_cast<int>(a), B.idCell[f]) != static_cast<int>(a))
      rep.problems.push_back("category: right unit fails at " +
                             B.cells[a].name);
    if (B.vcomp(B.idCell[g], static_cast<int>(a)) != static_cast<int>(a))
      rep.problems.push_back("category: left unit fails at " +
                             B.cells[a].name);
  }
  for (size_t c = 0; c < nc; ++c)
    for (size_t b = 0; b < nc; ++b) {
      if (B.cells[c].src != B.cells[b].dst) continue;
      for (size_t a = 0; a < nc; ++a) {
        if (B.cells[b].src != B.cells[a].dst) continue;
        int lhs = B.vcomp(static_cast<int>(c),
                          B.vcomp(static_cast<int>(b), static_cast<int>(a)));
        int rhs = B.vcomp(B.vcomp(static_cast<int>(c), static_cast<int>(b)),
                          static_cast<int>(a));
        if (lhs != rhs)
          rep.problems.push_back("category: vertical associativity fails at (" +
                                 B.cells[c].name + ", " + B.cells[b].name +
                                 ", " + B.cells[a].name + ")");
      }
    }

  // Strict units and associativity for arrows.
  for (size_t f = 0; f < na; ++f) {
    if (B.harr(B.idArrow[B.arrows[f].dst], static_cast<int>(f)) !=
        static_cast<int>(f))
      rep.problems.push_back("arrows: left unit fails at " + B.arrows[f].name);
    if (B.harr(static_cast<int>(f), B.idArrow[B.arrows[f].src]) !=
        static_cast<int>(f))
      rep.problems.push_back("arrows: right unit fails at " +
                             B.arrows[f].name);
  }
  for (size_t h = 0; h < na; ++h)
    for (size_t g = 0; g < na; ++g) {
      if (B.arrows[h].src != B.arrows[g].dst) continue;
      for (size_t f = 0; f < na; ++f) {
        if (B.arrows[g].src != B.arrows[f].dst) continue;
        int lhs = B.harr(static_cast<int>(h),
                         B.harr(static_cast<int>(g), static_cast<int>(f)));
        int rhs = B.harr(B.harr(static_cast<int>(h), static_cast<int>(g)),
                         static_cast<int>(f));
        if (lhs != rhs)
          rep.problems.push_back("arrows: associativity fails at (" +
                                 B.arrows[h].name + ", " + B.arrows[g].name +
                                 ", " + B.arrows[f].name + ")");
      }
    }

  // Horizontal composition preserves identities and is strictly unital
  // and associative on cells.
  for (size_t g = 0; g < na; ++g)
    for (size_t f = 0; f < na; ++f) {
      if (B.arrows[g].src != B.arrows[f].dst) continue;
      int gf = B.harr(static_cast<int>(g), static_cast<int>(f));
      if (B.hcell(B.idCell[g], B.idCell[f]) != B.idCell[gf])
        rep.problems.push_back("H1: identity cells do not compose to the "
                               "identity at (" +
                               B.arrows[g].name + ", " + B.arrows[f].name +
                               ")");
    }
  for (size_t a = 0; a < nc; ++a) {
    int srcObj = B.arrows[B.cells[a].src].src;
    int dstObj = B.arrows[B.cells[a].src].dst;
    if (B.hcell(B.idCell[B.idArrow[dstObj]], static_cast<int>(a)) !=
        static_cast<int>(a))
      rep.problems.push_back("H1: left unit whisker fails at " +
                             B.cells[a].name);
    if (B.hcell(static_cast<int>(a), B.idCell[B.idArrow[srcObj]]) !=
        static_cast<int>(a))
      rep.problems.push_back("H1: right unit whisker fails at " +
                             B.cells[a].name);
  }
  for (size_t c = 0; c < nc; ++c)
    for (size_t b = 0; b < nc; ++b) {
      if (B.arrows[B.cells[c].src].src != B.arrows[B.cells[b].src].dst)
        continue;
      for (size_t a = 0; a < nc; ++a) {
        if (B.arrows[B.cells[b].src].src != B.arrows[B.cells[a].src].dst)
          continue;
        int lhs = B.hcell(static_cast<int>(c),
                          B.hcell(static_cast<int>(b), static_cast<int>(a)));
        int rhs = B.hcell(B.hcell(static_cast<int>(c), static_cast<int>(b)),
                          static_cast<int>(a));
        if (lhs != rhs)
          rep.problems.push_back("H1: horizontal associativity fails at (" +
                                 B.cells[c].name + ", " + B.cells[b].name +
                                 ", " + B.cells[a].name + ")");
      }
    }

  // Interchange: for vertically composable b2 after b1 and a2 after a1
  // with the b side to the left of the a side,
  // (b2.b1)*(a2.a1) must equal (b2*a2).(b1*a1).
  for (size_t b2 = 0; b2 < nc; ++b2)
    for (size_t b1 = 0; b1 < nc; ++b1) {
      if (B.cells[b2].src != B.cells[b1].dst) continue;
      for (size_t a2 = 0; a2 < nc; ++a2) {
        if (B.arrows[B.cells[b2].src].src != B.arrows[B.cells[a2].src].dst)
          continue;
        for (size_t a1 = 0; a1 < nc; ++a1) {
          if (B.cells[a2].src != B.cells[a1].dst) continue;
          int lhs = B.hcell(B.vcomp(static_cast<int>(b2), static_cast<int>(b1)),
                            B.vcomp(static_cast<int>(a2), static_cast<int>(a1)));
          int rhs = B.vcomp(B.hcell(static_cast<int>(b2), static_cast<int>(a2)),
                            B.hcell(static_cast<int>(b1), static_cast<int>(a1)));
          if (lhs != rhs)
            rep.problems.push_back(
                "H2: interchange fails for the quadruple b2=" +
                B.cells[b2].name + " b1=" + B.cells[b1].name + " a2=" +
                B.cells[a2].name + " a1=" + B.cells[a1].name);
        }
      }
    }
  return rep;
}

bool verify_equivalence_witness(const FiniteBicategory& B,
                                const EquivalenceWitness& w,
                                std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (w.f < 0 || static_cast<size_t>(w.f) >= B.arrows.size() || w.g < 0 ||
      static_cast<size_t>(w.g) >= B.arrows.size())
    return fail("arrow out of range");
  const FBArrow& f = B.arrows[w.f];
  const FBArrow& g = B.arrows[w.g];
  if (g.src != f.dst || g.dst != f.src)
    return fail("quasiinverse boundary mismatch");
  int gf = B.harr(w.g, w.f);
  int fg = B.harr(w.f, w.g);
  int idS = B.idArrow[f.src];
  int idT = B.idArrow[f.dst];
  if (w.unit < 0 || static_cast<size_t>(w.unit) >= B.cells.size() ||
      B.cells[w.unit].src != idS || B.cells[w.unit].dst != gf)
    return fail("unit is not a cell id => g*f");
  if (w.counit < 0 || static_cast<size_t>(w.counit) >= B.cells.size() ||
      B.cells[w.counit].src != fg || B.cells[w.counit].dst != idT)
    return fail("counit is not a cell f*g => id");
  if (!B.cellInvertible(w.unit)) return fail("unit is not invertible");
  if (!B.cellInvertible(w.counit)) return fail("counit is not invertible");
  if (w.triangles) {
    int t1 = B.vcomp(B.whiskerCellArrow(w.counit, w.f),
                     B.whiskerArrowCell(w.f, w.unit));
    int t2 = B.vcomp(B.whiskerArrowCell(w.g, w.counit),
                     B.whiskerCellArrow(w.unit, w.g));
    if (t1 != B.idCell[w.f]) return fail("first triangle identity fails");
    if (t2 != B.idCell[w.g]) return fail("second triangle identity fails");
  }
  return true;
}

std::optional<EquivalenceWitness> find_equivalence_witness(
    const FiniteBicategory& B, int f) {
  if (f < 0 || static_cast<size_t>(f) >= B.arrows.size()) return std::nullopt;
  std::optional<EquivalenceWitness> loose;
  for (int g : B.homArrows(B.arrows[f].dst, B.arrows[f].src)) {
    int gf = B.harr(g, f);
    int fg = B.harr(f, g);
    int idS = B.idArrow[B.arrows[f].src];
    int idT = B.idArrow[B.arrows[f].dst];
    for (int unit : B.homCells(idS, gf)) {
      if (!B.cellInvertible(unit)) continue;
      for (int counit : B.homCells(fg, idT)) {
        if (!B.cellInvertible(counit)) continue;
        EquivalenceWitness w{f, g, unit, counit, true};
        if (verify_equivalence_witness(B, w)) return w;
        w.triangles = false;
        if (!loose && verify_equivalence_witness(B, w)) loose = w;
      }
    }
  }
  return loose;
}

bool check_quasiequivalence(const FiniteBicategory& B, int f) {
  if (f < 0 || static_cast<size_t>(f) >= B.arrows.size()) return false;
  size_t no = B.objects.size();
  int x = B.arrows[f].src;
  int y = B.arrows[f].dst;
  // Post-composition hom(Z, x) -> hom(Z, y), sending h to f*h and d to
  // id2(f)*d.
  for (size_t z = 0; z < no; ++z) {
    for (int h1 : B.homArrows(static_cast<int>(z), x))
      for (int h2 : B.homArrows(static_cast<int>(z), x)) {
        std::vector<int> seen;
        for (int d : B.homCells(h1, h2)) {
          int im = B.whiskerArrowCell(f, d);
          if (std::find(seen.begin(), seen.end(), im) != seen.end())
            return false;  // not faithful
          seen.push_back(im);
        }
        for (int gam : B.homCells(B.harr(f, h1), B.harr(f, h2)))
          if (std::find(seen.begin(), seen.end(), gam) == seen.end())
            return false;  // not full
      }
    // Pre-composition hom(y, Z) -> hom(x, Z).
    for (int h1 : B.homArrows(y, static_cast<int>(z)))
      for (int h2 : B.homArrows(y, static_cast<int>(z))) {
        std::vector<int> seen;
        for (int d : B.homCells(h1, h2)) {
          int im = B.whiskerCellArrow(d, f);
          if (std::find(seen.begin(), seen.end(), im) != seen.end())
            return false;
          seen.push_back(im);
        }
        for (int gam : B.homCells(B.harr(h1, f), B.harr(h2, f)))
          if (std::find(seen.begin(), seen.end(), gam) == seen.end())
            return false;
      }
  }
  return true;
}

FiniteBicategory opposite(const FiniteBicategory& B) {
  FiniteBicategory O = B;
  O.name = B.name + "-op";
  for (auto& a : O.arrows) std::swap(a.src, a.dst);
  size_t nA = B.arrows.size();
  size_t nC = B.cells.size();
  for (size_t l = 0; l < nA; ++l)
    for (size_t r = 0; r < nA; ++r) O.harrT[l][r] = B.harrT[r][l];
  for (size_t l = 0; l < nC; ++l)
    for (size_t r = 0; r < nC; ++r) O.hcellT[l][r] = B.hcellT[r][l];
  return O;
}

}  // namespace hocat
