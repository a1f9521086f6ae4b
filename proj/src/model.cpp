#include "hocat/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace hocat {

namespace {

bool flagAt(const std::vector<char>& v, int i) {
  return i >= 0 && i < static_cast<int>(v.size()) && v[i] != 0;
}

std::string aname(const FiniteBicategory& B, int f) {
  if (f < 0 || f >= static_cast<int>(B.arrows.size())) return "<bad arrow>";
  return B.arrows[f].name;
}

std::string cname(const FiniteBicategory& B, int c) {
  if (c < 0 || c >= static_cast<int>(B.cells.size())) return "<bad cell>";
  return B.cells[c].name;
}

// Lowest invertible cell f => g, or -1.
int lowestIso(const FiniteBicategory& B, int f, int g) {
  for (int c : B.homCells(f, g))
    if (B.cellInvertible(c)) return c;
  return -1;
}

bool allCellsInvertible(const FiniteBicategory& B) {
  for (size_t c = 0; c < B.cells.size(); ++c)
    if (!B.cellInvertible(static_cast<int>(c))) return false;
  return true;
}

std::array<int, 3> limitKey(const LimitWitness& w) {
  int kind = static_cast<int>(w.kind);
  switch (w.kind) {
    case LimitKind::Initial:
    case LimitKind::Terminal:
      return {kind, -1, -1};
    case LimitKind::coProduct:
    case LimitKind::Product:
      return {kind, w.obj0, w.obj1};
    default:
      return {kind, w.arr0, w.arr1};
  }
}

}  // namespace

bool ModelBicategory::inW(int f) const { return flagAt(cls.isW, f); }
bool ModelBicategory::inF(int f) const { return flagAt(cls.isF, f); }
bool ModelBicategory::inCoF(int f) const { return flagAt(cls.isCoF, f); }

const LimitWitness* ModelBicategory::limit(LimitKind k, int x0, int x1) const {
  auto it = limits.find({static_cast<int>(k), x0, x1});
  return it == limits.end() ? nullptr : &it->second;
}

void ModelBicategory::addLimit(const LimitWitness& w) {
  limits[limitKey(w)] = w;
}

int ModelBicategory::arrowFromInitial(int X) const {
  const LimitWitness* w = limit(LimitKind::Initial);
  if (!w) return -1;
  auto arrs = B.homArrows(w->apex, X);
  return arrs.empty() ? -1 : arrs.front();
}

int ModelBicategory::arrowToTerminal(int X) const {
  const LimitWitness* w = limit(LimitKind::Terminal);
  if (!w) return -1;
  auto arrs = B.homArrows(X, w->apex);
  return arrs.empty() ? -1 : arrs.front();
}

void register_limits(ModelBicategory& M) {
  const FiniteBicategory& B = M.B;
  for (LimitKind k : {LimitKind::Initial, LimitKind::Terminal}) {
    if (auto w = find_limit_witness(B, k)) M.addLimit(*w);
  }
  int nA = static_cast<int>(B.arrows.size());
  for (int a0 = 0; a0 < nA; ++a0)
    for (int a1 = 0; a1 < nA; ++a1) {
      if (B.arrows[a0].dst == B.arrows[a1].dst)
        for (LimitKind k : {LimitKind::Pullback, LimitKind::Comma})
          if (auto w = find_limit_witness(B, k, a0, a1)) M.addLimit(*w);
      if (B.arrows[a0].src == B.arrows[a1].src)
        for (LimitKind k : {LimitKind::Pushout, LimitKind::coComma})
          if (auto w = find_limit_witness(B, k, a0, a1)) M.addLimit(*w);
    }
}

LimitKind dualLimitKind(LimitKind k) {
  switch (k) {
    case LimitKind::Initial: return LimitKind::Terminal;
    case LimitKind::Terminal: return LimitKind::Initial;
    case LimitKind::coProduct: return LimitKind::Product;
    case LimitKind::Product: return LimitKind::coProduct;
    case LimitKind::Pushout: return LimitKind::Pullback;
    case LimitKind::Pullback: return LimitKind::Pushout;
    case LimitKind::coComma: return LimitKind::Comma;
    case LimitKind::Comma: return LimitKind::coComma;
  }
  return k;
}

ModelBicategory opposite(const ModelBicategory& M) {
  ModelBicategory O;
  O.B = opposite(M.B);
  O.cls.isW = M.cls.isW;
  O.cls.isF = M.cls.isCoF;
  O.cls.isCoF = M.cls.isF;
  for (const auto& [key, w] : M.limits) {
    (void)key;
    LimitWitness d = w;
    d.kind = dualLimitKind(w.kind);
    O.addLimit(d);
  }
  return O;
}

std::string factorModeName(FactorMode m) {
  return m == FactorMode::TrivialCofibration ? "trivial-cofibration"
                                             : "trivial-fibration";
}

bool verify_lifting_square(const FiniteBicategory& B, const LiftingSquare& sq,
                           std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  int nA = static_cast<int>(B.arrows.size());
  for (int f : {sq.i, sq.p, sq.a, sq.b})
    if (f < 0 || f >= nA) return fail("square: arrow id out of range");
  if (B.arrows[sq.a].src != B.arrows[sq.i].src)
    return fail("square: a and i start at different objects");
  if (B.arrows[sq.a].dst != B.arrows[sq.p].src)
    return fail("square: a does not land in the source of p");
  if (B.arrows[sq.b].src != B.arrows[sq.i].dst)
    return fail("square: b does not start at the target of i");
  if (B.arrows[sq.b].dst != B.arrows[sq.p].dst)
    return fail("square: b and p end at different objects");
  int pa = B.harr(sq.p, sq.a);
  int bi = B.harr(sq.b, sq.i);
  if (pa == -1 || bi == -1) return fail("square: side composite undefined");
  if (sq.gamma < 0 || sq.gamma >= static_cast<int>(B.cells.size()))
    return fail("square: gamma out of range");
  if (B.cells[sq.gamma].src != pa || B.cells[sq.gamma].dst != bi)
    return fail("square: gamma is not a cell p*a => b*i");
  if (!B.cellInvertible(sq.gamma)) return fail("square: gamma not invertible");
  return true;
}

bool verify_filler(const FiniteBicategory& B, const LiftingSquare& sq,
                   const Filler& fl, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!verify_lifting_square(B, sq, why)) return false;
  if (fl.f < 0 || fl.f >= static_cast<int>(B.arrows.size()))
    return fail("filler: f out of range");
  if (B.arrows[fl.f].src != B.arrows[sq.i].dst ||
      B.arrows[fl.f].dst != B.arrows[sq.p].src)
    return fail("filler: f is not an arrow from the target of i to the source of p");
  int fi = B.harr(fl.f, sq.i);
  int pf = B.harr(sq.p, fl.f);
  int nC = static_cast<int>(B.cells.size());
  if (fl.lambda < 0 || fl.lambda >= nC ||
      B.cells[fl.lambda].src != sq.a || B.cells[fl.lambda].dst != fi)
    return fail("filler: lambda is not a cell a => f*i");
  if (!B.cellInvertible(fl.lambda)) return fail("filler: lambda not invertible");
  if (fl.rho < 0 || fl.rho >= nC || B.cells[fl.rho].src != pf ||
      B.cells[fl.rho].dst != sq.b)
    return fail("filler: rho is not a cell p*f => b");
  if (!B.cellInvertible(fl.rho)) return fail("filler: rho not invertible");
  int lhs = B.vcomp(B.hcell(fl.rho, B.idCell[sq.i]),
                    B.hcell(B.idCell[sq.p], fl.lambda));
  if (lhs != sq.gamma) return fail("filler: pasting does not give gamma back");
  return true;
}

std::vector<Filler> enumerate_fillers(const FiniteBicategory& B,
                                      const LiftingSquare& sq) {
  std::vector<Filler> out;
  if (!verify_lifting_square(B, sq)) return out;
  int X = B.arrows[sq.i].dst;
  int Y = B.arrows[sq.p].src;
  for (int f : B.homArrows(X, Y)) {
    int fi = B.harr(f, sq.i);
    int pf = B.harr(sq.p, f);
    if (fi == -1 || pf == -1) continue;
    for (int lambda : B.homCells(sq.a, fi)) {
      if (!B.cellInvertible(lambda)) continue;
      for (int rho : B.homCells(pf, sq.b)) {
        if (!B.cellInvertible(rho)) continue;
        Filler fl{f, lambda, rho};
        if (verify_filler(B, sq, fl)) out.push_back(fl);
      }
    }
  }
  return out;
}

std::optional<Filler> find_filler(const FiniteBicategory& B,
                                  const LiftingSquare& sq) {
  auto all = enumerate_fillers(B, sq);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<int> find_filler_delta(const FiniteBicategory& B,
                                     const LiftingSquare& sq1,
                                     const LiftingSquare& sq2,
                                     const Filler& fl1, const Filler& fl2,
                                     int alpha, int beta, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return std::nullopt;
  };
  if (sq1.i != sq2.i || sq1.p != sq2.p)
    return fail("delta: the squares are not over the same i and p");
  std::string sub;
  if (!verify_filler(B, sq1, fl1, &sub)) return fail("delta: first " + sub);
  if (!verify_filler(B, sq2, fl2, &sub)) return fail("delta: second " + sub);
  int nC = static_cast<int>(B.cells.size());
  if (alpha < 0 || alpha >= nC || B.cells[alpha].src != sq1.a ||
      B.cells[alpha].dst != sq2.a)
    return fail("delta: alpha is not a cell a1 => a2");
  if (beta < 0 || beta >= nC || B.cells[beta].src != sq1.b ||
      B.cells[beta].dst != sq2.b)
    return fail("delta: beta is not a cell b1 => b2");

  int idI = B.idCell[sq1.i];
  int idP = B.idCell[sq1.p];
  int hypL = B.vcomp(sq2.gamma, B.hcell(idP, alpha));
  int hypR = B.vcomp(B.hcell(beta, idI), sq1.gamma);
  if (hypL == -1 || hypR == -1 || hypL != hypR)
    return fail("delta: compatibility hypothesis fails between the squares");

  for (int delta : B.homCells(fl1.f, fl2.f)) {
    int midL = B.vcomp(fl2.lambda, alpha);
    int midR = B.vcomp(B.hcell(delta, idI), fl1.lambda);
    if (midL == -1 || midL != midR) continue;
    int rightL = B.vcomp(fl2.rho, B.hcell(idP, delta));
    int rightR = B.vcomp(beta, fl1.rho);
    if (rightL == -1 || rightL != rightR) continue;
    return delta;
  }
  return fail("delta: no comparison cell satisfies both equations");
}

bool verify_factorization(const ModelBicategory& M, int f, FactorMode mode,
                          const Factorization& fact, std::string* why) {
  const FiniteBicategory& B = M.B;
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  int nA = static_cast<int>(B.arrows.size());
  if (f < 0 || f >= nA) return fail("factorization: f out of range");
  if (fact.i < 0 || fact.i >= nA || fact.p < 0 || fact.p >= nA ||
      fact.mid < 0 || fact.mid >= static_cast<int>(B.objects.size()))
    return fail("factorization: ids out of range");
  if (B.arrows[fact.i].src != B.arrows[f].src ||
      B.arrows[fact.i].dst != fact.mid)
    return fail("factorization: i is not an arrow src f -> mid");
  if (B.arrows[fact.p].src != fact.mid ||
      B.arrows[fact.p].dst != B.arrows[f].dst)
    return fail("factorization: p is not an arrow mid -> dst f");
  int pi = B.harr(fact.p, fact.i);
  if (pi == -1) return fail("factorization: p*i undefined");
  int nC = static_cast<int>(B.cells.size());
  if (fact.iso < 0 || fact.iso >= nC || B.cells[fact.iso].src != pi ||
      B.cells[fact.iso].dst != f)
    return fail("factorization: iso is not a cell p*i => f");
  if (!B.cellInvertible(fact.iso))
    return fail("factorization: iso not invertible");
  if (!M.inCoF(fact.i)) return fail("factorization: i not a cofibration");
  if (!M.inF(fact.p)) return fail("factorization: p not a fibration");
  if (mode == FactorMode::TrivialCofibration && !M.inW(fact.i))
    return fail("factorization: i not a weak equivalence");
  if (mode == FactorMode::TrivialFibration && !M.inW(fact.p))
    return fail("factorization: p not a weak equivalence");
  return true;
}

std::optional<Factorization> find_factorization(const ModelBicategory& M,
                                                int f, FactorMode mode) {
  const FiniteBicategory& B = M.B;
  if (f < 0 || f >= static_cast<int>(B.arrows.size())) return std::nullopt;
  int src = B.arrows[f].src;
  int dst = B.arrows[f].dst;

  Factorization viaId{B.idArrow[src], src, f, B.idCell[f]};
  if (verify_factorization(M, f, mode, viaId)) return viaId;
  Factorization idAfter{f, dst, B.idArrow[dst], B.idCell[f]};
  if (verify_factorization(M, f, mode, idAfter)) return idAfter;

  for (int mid = 0; mid < static_cast<int>(B.objects.size()); ++mid)
    for (int i : B.homArrows(src, mid)) {
      if (!M.inCoF(i)) continue;
      if (mode == FactorMode::TrivialCofibration && !M.inW(i)) continue;
      for (int p : B.homArrows(mid, dst)) {
        if (!M.inF(p)) continue;
        if (mode == FactorMode::TrivialFibration && !M.inW(p)) continue;
        int pi = B.harr(p, i);
        if (pi == -1) continue;
        for (int iso : B.homCells(pi, f)) {
          if (!B.cellInvertible(iso)) continue;
          Factorization fact{i, mid, p, iso};
          if (verify_factorization(M, f, mode, fact)) return fact;
        }
      }
    }
  return std::nullopt;
}

namespace {

std::string squareDesc(const FiniteBicategory& B, const LiftingSquare& sq) {
  return "square i=" + aname(B, sq.i) + " p=" + aname(B, sq.p) +
         " a=" + aname(B, sq.a) + " b=" + aname(B, sq.b) +
         " gamma=" + cname(B, sq.gamma);
}

AxiomCheck checkM0Like(const ModelBicategory& M, const std::string& name,
                       const std::vector<LimitKind>& kinds) {
  AxiomRun run(name);
  for (const auto& [key, w] : M.limits) {
    (void)key;
    if (std::find(kinds.begin(), kinds.end(), w.kind) == kinds.end()) continue;
    LimitReport lr = verify_limit_witness(M.B, w);
    std::string desc = limitKindName(w.kind) + " witness at apex " +
                       M.B.objects[w.apex];
    if (w.arr0 >= 0)
      desc += " over (" + aname(M.B, w.arr0) + ", " + aname(M.B, w.arr1) + ")";
    run.instance(lr.ok(), desc + (lr.ok() ? "" : ": does not verify"));
  }
  return run.check;
}

AxiomCheck checkM1(const ModelBicategory& M) {
  const FiniteBicategory& B = M.B;
  AxiomRun run("M1");
  int nA = static_cast<int>(B.arrows.size());
  for (int i = 0; i < nA; ++i) {
    if (!M.inCoF(i)) continue;
    for (int p = 0; p < nA; ++p) {
      if (!M.inF(p)) continue;
      if (!M.inW(i) && !M.inW(p)) continue;

      std::vector<std::pair<LiftingSquare, std::vector<Filler>>> squares;
      for (int a : B.homArrows(B.arrows[i].src, B.arrows[p].src))
        for (int b : B.homArrows(B.arrows[i].dst, B.arrows[p].dst)) {
          int pa = B.harr(p, a);
          int bi = B.harr(b, i);
          if (pa == -1 || bi == -1) continue;
          for (int gamma : B.homCells(pa, bi)) {
            if (!B.cellInvertible(gamma)) continue;
            LiftingSquare sq{i, p, a, b, gamma};
            auto fillers = enumerate_fillers(B, sq);
            run.instance(!fillers.empty(), squareDesc(B, sq) + ": no filler");
            if (!fillers.empty()) squares.emplace_back(sq, std::move(fillers));
          }
        }

      for (const auto& [sq1, fls1] : squares)
        for (const auto& [sq2, fls2] : squares)
          for (int alpha : B.homCells(sq1.a, sq2.a))
            for (int beta : B.homCells(sq1.b, sq2.b)) {
              int hypL = B.vcomp(sq2.gamma, B.hcell(B.idCell[p], alpha));
              int hypR = B.vcomp(B.hcell(beta, B.idCell[i]), sq1.gamma);
              if (hypL == -1 || hypL != hypR) continue;
              for (const Filler& f1 : fls1)
                for (const Filler& f2 : fls2) {
                  auto d = find_filler_delta(B, sq1, sq2, f1, f2, alpha, beta);
                  run.instance(d.has_value(),
                               "no delta between fillers of " +
                                   squareDesc(B, sq1) + " and " +
                                   squareDesc(B, sq2) + " under alpha=" +
                                   cname(B, alpha) + " beta=" +
                                   cname(B, beta));
                }
            }
    }
  }
  return run.check;
}

AxiomCheck checkM2(const ModelBicategory& M) {
  AxiomRun run("M2");
  int nA = static_cast<int>(M.B.arrows.size());
  for (int f = 0; f < nA; ++f)
    for (FactorMode mode :
         {FactorMode::TrivialCofibration, FactorMode::TrivialFibration}) {
      auto fact = find_factorization(M, f, mode);
      run.instance(fact.has_value(), "arrow " + aname(M.B, f) + " mode " +
                                         factorModeName(mode) +
                                         ": no factorization");
    }
  return run.check;
}

AxiomCheck checkM3(const ModelBicategory& M) {
  const FiniteBicategory& B = M.B;
  AxiomRun run("M3");
  int nA = static_cast<int>(B.arrows.size());
  for (int l = 0; l < nA; ++l)
    for (int r = 0; r < nA; ++r) {
      int c = B.harr(l, r);
      if (c == -1) continue;
      if (M.inF(l) && M.inF(r))
        run.instance(M.inF(c), "composite of fibrations " + aname(B, l) +
                                   "*" + aname(B, r) + " not a fibration");
      if (M.inCoF(l) && M.inCoF(r))
        run.instance(M.inCoF(c), "composite of cofibrations " + aname(B, l) +
                                     "*" + aname(B, r) +
                                     " not a cofibration");
    }
  for (const auto& [key, w] : M.limits) {
    (void)key;
    if (w.kind == LimitKind::Pullback) {
      if (M.inF(w.arr1))
        run.instance(M.inF(w.leg0),
                     "Pullback of fibration " + aname(B, w.arr1) +
                         ": projection " + aname(B, w.leg0) +
                         " not a fibration");
      if (M.inF(w.arr0))
        run.instance(M.inF(w.leg1),
                     "Pullback of fibration " + aname(B, w.arr0) +
                         ": projection " + aname(B, w.leg1) +
                         " not a fibration");
    }
    if (w.kind == LimitKind::Pushout) {
      if (M.inCoF(w.arr1))
        run.instance(M.inCoF(w.leg0),
                     "Pushout of cofibration " + aname(B, w.arr1) +
                         ": inclusion " + aname(B, w.leg0) +
                         " not a cofibration");
      if (M.inCoF(w.arr0))
        run.instance(M.inCoF(w.leg1),
                     "Pushout of cofibration " + aname(B, w.arr0) +
                         ": inclusion " + aname(B, w.leg1) +
                         " not a cofibration");
    }
  }
  for (int f = 0; f < nA; ++f)
    if (find_equivalence_witness(B, f))
      run.instance(M.inF(f) && M.inCoF(f),
                   "equivalence " + aname(B, f) +
                       " not in both fibrations and cofibrations");
  for (int f = 0; f < nA; ++f)
    for (int g = f + 1; g < nA; ++g) {
      if (!B.arrowsParallel(f, g)) continue;
      if (lowestIso(B, f, g) == -1) continue;
      bool same = M.inF(f) == M.inF(g) && M.inCoF(f) == M.inCoF(g) &&
                  M.inW(f) == M.inW(g);
      run.instance(same, "isomorphic arrows " + aname(B, f) + " and " +
                             aname(B, g) + " carry different class flags");
    }
  return run.check;
}

AxiomCheck checkM4(const ModelBicategory& M) {
  const FiniteBicategory& B = M.B;
  AxiomRun run("M4");
  for (const auto& [key, w] : M.limits) {
    (void)key;
    if (w.kind == LimitKind::Pullback) {
      if (M.inF(w.arr1) && M.inW(w.arr1))
        run.instance(M.inW(w.leg0),
                     "Pullback of trivial fibration " + aname(B, w.arr1) +
                         ": projection " + aname(B, w.leg0) + " not in W");
      if (M.inF(w.arr0) && M.inW(w.arr0))
        run.instance(M.inW(w.leg1),
                     "Pullback of trivial fibration " + aname(B, w.arr0) +
                         ": projection " + aname(B, w.leg1) + " not in W");
    }
    if (w.kind == LimitKind::Pushout) {
      if (M.inCoF(w.arr1) && M.inW(w.arr1))
        run.instance(M.inW(w.leg0),
                     "Pushout of trivial cofibration " + aname(B, w.arr1) +
                         ": inclusion " + aname(B, w.leg0) + " not in W");
      if (M.inCoF(w.arr0) && M.inW(w.arr0))
        run.instance(M.inW(w.leg1),
                     "Pushout of trivial cofibration " + aname(B, w.arr0) +
                         ": inclusion " + aname(B, w.leg1) + " not in W");
    }
  }
  return run.check;
}

AxiomCheck checkM5(const ModelBicategory& M) {
  const FiniteBicategory& B = M.B;
  AxiomRun run("M5");
  int nA = static_cast<int>(B.arrows.size());
  for (int g = 0; g < nA; ++g)
    for (int f = 0; f < nA; ++f) {
      int gf = B.harr(g, f);
      if (gf == -1) continue;
      for (int h = 0; h < nA; ++h) {
        if (!B.arrowsParallel(gf, h)) continue;
        if (lowestIso(B, gf, h) == -1) continue;
        int have = (M.inW(f) ? 1 : 0) + (M.inW(g) ? 1 : 0) +
                   (M.inW(h) ? 1 : 0);
        run.instance(have != 2, "two of three in W fails for g=" +
                                    aname(B, g) + " f=" + aname(B, f) +
                                    " h=" + aname(B, h));
      }
    }
  for (int f = 0; f < nA; ++f)
    if (find_equivalence_witness(B, f))
      run.instance(M.inW(f),
                   "equivalence " + aname(B, f) + " not a weak equivalence");
  return run.check;
}

AxiomCheck checkMM3(const ModelBicategory& M) {
  const FiniteBicategory& B = M.B;
  AxiomRun run("MM3");
  for (const auto& [key, w] : M.limits) {
    (void)key;
    if (w.kind == LimitKind::Comma) {
      if (M.inF(w.arr1))
        run.instance(M.inF(w.leg0),
                     "Comma of fibration " + aname(B, w.arr1) +
                         ": projection " + aname(B, w.leg0) +
                         " not a fibration");
      if (M.inF(w.arr0))
        run.instance(M.inF(w.leg1),
                     "Comma of fibration " + aname(B, w.arr0) +
                         ": projection " + aname(B, w.leg1) +
                         " not a fibration");
    }
    if (w.kind == LimitKind::coComma) {
      if (M.inCoF(w.arr1))
        run.instance(M.inCoF(w.leg0),
                     "coComma of cofibration " + aname(B, w.arr1) +
                         ": inclusion " + aname(B, w.leg0) +
                         " not a cofibration");
      if (M.inCoF(w.arr0))
        run.instance(M.inCoF(w.leg1),
                     "coComma of cofibration " + aname(B, w.arr0) +
                         ": inclusion " + aname(B, w.leg1) +
                         " not a cofibration");
    }
  }
  return run.check;
}

AxiomCheck checkMM4(const ModelBicategory& M) {
  const FiniteBicategory& B = M.B;
  AxiomRun run("MM4");
  for (const auto& [key, w] : M.limits) {
    (void)key;
    if (w.kind == LimitKind::Comma) {
      if (M.inF(w.arr1) && M.inW(w.arr1))
        run.instance(M.inW(w.leg0),
                     "Comma of trivial fibration " + aname(B, w.arr1) +
                         ": projection " + aname(B, w.leg0) + " not in W");
      if (M.inF(w.arr0) && M.inW(w.arr0))
        run.instance(M.inW(w.leg1),
                     "Comma of trivial fibration " + aname(B, w.arr0) +
                         ": projection " + aname(B, w.leg1) + " not in W");
    }
    if (w.kind == LimitKind::coComma) {
      if (M.inCoF(w.arr1) && M.inW(w.arr1))
        run.instance(M.inW(w.leg0),
                     "coComma of trivial cofibration " + aname(B, w.arr1) +
                         ": inclusion " + aname(B, w.leg0) + " not in W");
      if (M.inCoF(w.arr0) && M.inW(w.arr0))
        run.instance(M.inW(w.leg1),
                     "coComma of trivial cofibration " + aname(B, w.arr0) +
                         ": inclusion " + aname(B, w.leg1) + " not in W");
    }
  }
  return run.check;
}

}  // namespace

AxiomReport check_model_axioms(const ModelBicategory& M,
                               const std::vector<std::string>& which) {
  AxiomReport rep;
  const FiniteBicategory& B = M.B;

  std::string why;
  if (!B.validate(&why)) {
    rep.problems.push_back("backend: " + why);
    return rep;
  }
  size_t nA = B.arrows.size();
  if (M.cls.isW.size() != nA || M.cls.isF.size() != nA ||
      M.cls.isCoF.size() != nA) {
    rep.problems.push_back("classes: flag vectors must have one entry per arrow");
    return rep;
  }

  auto wanted = [&](const char* name) {
    return which.empty() ||
           std::find(which.begin(), which.end(), name) != which.end();
  };

  if (wanted("M0")) {
    rep.axioms.push_back(
        checkM0Like(M, "M0",
                    {LimitKind::Initial, LimitKind::Terminal,
                     LimitKind::Pullback, LimitKind::Pushout}));
    if (!M.limit(LimitKind::Initial))
      rep.notes.push_back("M0: no Initial witness registered");
    if (!M.limit(LimitKind::Terminal))
      rep.notes.push_back("M0: no Terminal witness registered");
  }
  if (wanted("M1")) rep.axioms.push_back(checkM1(M));
  if (wanted("M2")) rep.axioms.push_back(checkM2(M));
  if (wanted("M3")) rep.axioms.push_back(checkM3(M));
  if (wanted("M4")) rep.axioms.push_back(checkM4(M));
  if (wanted("M5")) rep.axioms.push_back(checkM5(M));

  bool invertibleWorld = allCellsInvertible(B);
  if (wanted("MM0"))
    rep.axioms.push_back(
        checkM0Like(M, "MM0", {LimitKind::Comma, LimitKind::coComma}));
  if (wanted("MM3")) {
    if (invertibleWorld) {
      rep.axioms.push_back(AxiomCheck{"MM3", 0, 0, ""});
      rep.notes.push_back(
          "MM3: every 2-cell is invertible, so the square case already covers it");
    } else {
      rep.axioms.push_back(checkMM3(M));
    }
  }
  if (wanted("MM4")) {
    if (invertibleWorld) {
      rep.axioms.push_back(AxiomCheck{"MM4", 0, 0, ""});
      rep.notes.push_back(
          "MM4: every 2-cell is invertible, so the square case already covers it");
    } else {
      rep.axioms.push_back(checkMM4(M));
    }
  }
  return rep;
}

Fibrancy fibrancy_status(const ModelBicategory& M, int X) {
  if (X < 0 || X >= static_cast<int>(M.B.objects.size()))
    throw std::out_of_range("fibrancy: object id out of range");
  Fibrancy st;
  int up = M.arrowToTerminal(X);
  if (M.limit(LimitKind::Terminal)) st.fibrant = up != -1 && M.inF(up);
  int down = M.arrowFromInitial(X);
  if (M.limit(LimitKind::Initial)) st.cofibrant = down != -1 && M.inCoF(down);
  return st;
}

std::optional<WSplitFactorization> factor_weq_as_wsplit(
    const ModelBicategory& M, int f, std::string* why) {
  const FiniteBicategory& B = M.B;
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return std::nullopt;
  };
  if (f < 0 || f >= static_cast<int>(B.arrows.size()))
    return fail("w-split: arrow id out of range");
  if (!M.inW(f)) return fail("w-split: " + aname(B, f) +
                             " is not a weak equivalence");
  int X = B.arrows[f].src;
  int Y = B.arrows[f].dst;
  if (!fibrancy_status(M, X).fibrant)
    return fail("w-split: source " + B.objects[X] + " is not fibrant");
  if (!fibrancy_status(M, Y).cofibrant)
    return fail("w-split: target " + B.objects[Y] + " is not cofibrant");

  auto fact = find_factorization(M, f, FactorMode::TrivialCofibration);
  if (!fact)
    return fail("w-split: no trivial-cofibration factorization of " +
                aname(B, f));
  if (!M.inW(fact->p))
    return fail("w-split: the fibration leg " + aname(B, fact->p) +
                " is not a weak equivalence");

  WSplitFactorization out;
  out.fact = *fact;

  int tX = M.arrowToTerminal(X);
  if (tX != -1) {
    // Lift the identity against the canonical fibration to the
    // terminal object, as the retraction is produced on paper.
    int tZ = M.arrowToTerminal(fact->mid);
    int gamma = tZ == -1 ? -1
                         : lowestIso(B, B.harr(tX, B.idArrow[X]),
                                     B.harr(tZ, fact->i));
    if (gamma == -1)
      return fail("w-split: no comparison cell over the terminal object");
    LiftingSquare sq{fact->i, tX, B.idArrow[X], tZ, gamma};
    auto fl = find_filler(B, sq);
    if (!fl) return fail("w-split: no retraction filler for " +
                         aname(B, fact->i));
    out.r = fl->f;
    out.retIso = B.inverseCell(fl->lambda).value();
  } else {
    for (int r : B.homArrows(fact->mid, X)) {
      int iso = lowestIso(B, B.harr(r, fact->i), B.idArrow[X]);
      if (iso == -1) continue;
      out.r = r;
      out.retIso = iso;
      break;
    }
    if (out.r == -1)
      return fail("w-split: no retraction for " + aname(B, fact->i));
  }

  int cY = M.arrowFromInitial(Y);
  if (cY != -1) {
    int cZ = M.arrowFromInitial(fact->mid);
    int gamma = cZ == -1 ? -1
                         : lowestIso(B, B.harr(fact->p, cZ),
                                     B.harr(B.idArrow[Y], cY));
    if (gamma == -1)
      return fail("w-split: no comparison cell under the initial object");
    LiftingSquare sq{cY, fact->p, cZ, B.idArrow[Y], gamma};
    auto fl = find_filler(B, sq);
    if (!fl) return fail("w-split: no section filler for " +
                         aname(B, fact->p));
    out.s = fl->f;
    out.secIso = fl->rho;
  } else {
    for (int s : B.homArrows(Y, fact->mid)) {
      int iso = lowestIso(B, B.harr(fact->p, s), B.idArrow[Y]);
      if (iso == -1) continue;
      out.s = s;
      out.secIso = iso;
      break;
    }
    if (out.s == -1)
      return fail("w-split: no section for " + aname(B, fact->p));
  }

  out.midStatus = fibrancy_status(M, fact->mid);
  return out;
}

Replacement::Replacement(const ModelBicategory& M)
    : M_(&M), Mop_(opposite(M)) {
  q_.M = M_;
  r_.M = &Mop_;
}

void Replacement::ensureObj(Side& s, int X) {
  if (s.obj.count(X)) return;
  const ModelBicategory& M = *s.M;
  const FiniteBicategory& B = M.B;
  if (X < 0 || X >= static_cast<int>(B.objects.size()))
    throw std::out_of_range("replacement: object id out of range");
  int down = M.arrowFromInitial(X);
  bool cofibrant = down == -1 || M.inCoF(down);
  if (cofibrant) {
    s.obj[X] = X;
    s.p[X] = B.idArrow[X];
    return;
  }
  auto fact = find_factorization(M, down, FactorMode::TrivialFibration);
  if (!fact)
    throw std::runtime_error(
        "replacement: no cofibration/trivial-fibration factorization of " +
        aname(B, down));
  int downMid = M.arrowFromInitial(fact->mid);
  if (downMid == -1 || !M.inCoF(downMid))
    throw std::runtime_error("replacement: chosen object " +
                             B.objects[fact->mid] + " is not cofibrant");
  s.obj[X] = fact->mid;
  s.p[X] = fact->p;
}

void Replacement::ensureArr(Side& s, int f) {
  if (s.arr.count(f)) return;
  const ModelBicategory& M = *s.M;
  const FiniteBicategory& B = M.B;
  if (f < 0 || f >= static_cast<int>(B.arrows.size()))
    throw std::out_of_range("replacement: arrow id out of range");
  int X = B.arrows[f].src;
  int Y = B.arrows[f].dst;
  ensureObj(s, X);
  ensureObj(s, Y);
  bool bothPlain = s.obj[X] == X && s.p[X] == B.idArrow[X] &&
                   s.obj[Y] == Y && s.p[Y] == B.idArrow[Y];
  if (bothPlain) {
    ArrowEntry e;
    e.arr = f;
    e.rho = B.idCell[f];
    e.degenerate = true;
    s.arr[f] = e;
    return;
  }
  int i = M.arrowFromInitial(s.obj[X]);
  int a = M.arrowFromInitial(s.obj[Y]);
  if (i == -1 || a == -1)
    throw std::runtime_error("replacement: initial witness disappeared");
  if (!M.inCoF(i))
    throw std::runtime_error("replacement: " + aname(B, i) +
                             " is not a cofibration");
  int p = s.p[Y];
  if (!M.inF(p) || !M.inW(p))
    throw std::runtime_error("replacement: " + aname(B, p) +
                             " is not a trivial fibration");
  int b = B.harr(f, s.p[X]);
  if (b == -1) throw std::runtime_error("replacement: square base undefined");
  int gamma = lowestIso(B, B.harr(p, a), B.harr(b, i));
  if (gamma == -1)
    throw std::runtime_error(
        "replacement: no comparison cell under the initial object for " +
        aname(B, f));
  LiftingSquare sq{i, p, a, b, gamma};
  auto fl = find_filler(B, sq);
  if (!fl)
    throw std::runtime_error("replacement: no lift of " + aname(B, f) +
                             " through " + aname(B, p));
  ArrowEntry e;
  e.arr = fl->f;
  e.rho = fl->rho;
  e.degenerate = false;
  e.sq = sq;
  e.fl = *fl;
  s.arr[f] = e;
}

void Replacement::ensureCell(Side& s, int mu) {
  if (s.cell.count(mu)) return;
  const ModelBicategory& M = *s.M;
  const FiniteBicategory& B = M.B;
  if (mu < 0 || mu >= static_cast<int>(B.cells.size()))
    throw std::out_of_range("replacement: cell id out of range");
  int f = B.cells[mu].src;
  int g = B.cells[mu].dst;
  ensureArr(s, f);
  ensureArr(s, g);
  const ArrowEntry& ef = s.arr[f];
  const ArrowEntry& eg = s.arr[g];
  if (ef.degenerate && eg.degenerate) {
    s.cell[mu] = mu;
    return;
  }
  if (ef.degenerate != eg.degenerate)
    throw std::runtime_error(
        "replacement: parallel arrows disagree about degeneracy");
  int X = B.arrows[f].src;
  int alpha = B.idCell[ef.sq.a];
  int beta = B.hcell(mu, B.idCell[s.p[X]]);
  if (beta == -1)
    throw std::runtime_error("replacement: whiskered cell undefined");
  std::string why;
  auto delta =
      find_filler_delta(B, ef.sq, eg.sq, ef.fl, eg.fl, alpha, beta, &why);
  if (!delta) throw std::runtime_error("replacement: " + why);
  s.cell[mu] = *delta;
}

int Replacement::qObj(int X) {
  ensureObj(q_, X);
  return q_.obj[X];
}

int Replacement::pArr(int X) {
  ensureObj(q_, X);
  return q_.p[X];
}

int Replacement::qArr(int f) {
  ensureArr(q_, f);
  return q_.arr[f].arr;
}

int Replacement::rhoCell(int f) {
  ensureArr(q_, f);
  return q_.arr[f].rho;
}

int Replacement::qCell(int mu) {
  ensureCell(q_, mu);
  return q_.cell[mu];
}

int Replacement::rObj(int X) {
  ensureObj(r_, X);
  return r_.obj[X];
}

int Replacement::iArr(int X) {
  ensureObj(r_, X);
  return r_.p[X];
}

int Replacement::rArr(int f) {
  ensureArr(r_, f);
  return r_.arr[f].arr;
}

int Replacement::lambdaCell(int f) {
  ensureArr(r_, f);
  // The opposite-side comparison reads Rf*i_X => i_Y*f back in the
  // original orientation; the stated lambda is its inverse.
  return M_->B.inverseCell(r_.arr[f].rho).value();
}

int Replacement::rCell(int mu) {
  ensureCell(r_, mu);
  return r_.cell[mu];
}

}  // namespace hocat
