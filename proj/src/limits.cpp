#include "hocat/limits.hpp"

#include <algorithm>

namespace hocat {

namespace {

const char* kKindNames[] = {"Initial",  "Terminal", "coProduct", "Product",
                            "Pushout",  "Pullback", "coComma",   "Comma"};

bool isColimitKind(LimitKind k) {
  return k == LimitKind::Initial || k == LimitKind::coProduct ||
         k == LimitKind::Pushout || k == LimitKind::coComma;
}

bool isSquareKind(LimitKind k) {
  return k == LimitKind::Pushout || k == LimitKind::Pullback ||
         k == LimitKind::coComma || k == LimitKind::Comma;
}

bool squareNeedsInvertible(LimitKind k) {
  return k == LimitKind::Pushout || k == LimitKind::Pullback;
}

// A test cone: one or two arrows plus the square cell where the shape
// has one.
struct Cone {
  int a = -1;
  int b = -1;
  int cell = -1;
  bool operator==(const Cone&) const = default;
};

// Everything verify needs to enumerate cones uniformly across kinds.
struct ShapeInfo {
  bool colimit = true;
  bool hasCell = false;
  bool needInvertible = false;
  int d0 = -1, d1 = -1;  // objects the cone arrows connect to W
  int f = -1, g = -1;    // span or cospan arrows
};

std::optional<ShapeInfo> shapeInfo(const FiniteBicategory& B,
                                   const LimitWitness& w) {
  ShapeInfo s;
  s.colimit = isColimitKind(w.kind);
  s.hasCell = isSquareKind(w.kind);
  s.needInvertible = squareNeedsInvertible(w.kind);
  switch (w.kind) {
    case LimitKind::Initial:
    case LimitKind::Terminal:
      return s;
    case LimitKind::coProduct:
    case LimitKind::Product:
      s.d0 = w.obj0;
      s.d1 = w.obj1;
      return s;
    case LimitKind::Pushout:
    case LimitKind::coComma: {
      if (w.arr0 < 0 || static_cast<size_t>(w.arr0) >= B.arrows.size() ||
          w.arr1 < 0 || static_cast<size_t>(w.arr1) >= B.arrows.size())
        return std::nullopt;
      if (B.arrows[w.arr0].src != B.arrows[w.arr1].src) return std::nullopt;
      s.f = w.arr0;
      s.g = w.arr1;
      s.d0 = B.arrows[w.arr0].dst;
      s.d1 = B.arrows[w.arr1].dst;
      return s;
    }
    case LimitKind::Pullback:
    case LimitKind::Comma: {
      if (w.arr0 < 0 || static_cast<size_t>(w.arr0) >= B.arrows.size() ||
          w.arr1 < 0 || static_cast<size_t>(w.arr1) >= B.arrows.size())
        return std::nullopt;
      if (B.arrows[w.arr0].dst != B.arrows[w.arr1].dst) return std::nullopt;
      s.f = w.arr0;
      s.g = w.arr1;
      s.d0 = B.arrows[w.arr0].src;
      s.d1 = B.arrows[w.arr1].src;
      return s;
    }
  }
  return std::nullopt;
}

// The composite the cone cell of a cone (a, b, -) lives over.
int coneCellSrc(const FiniteBicategory& B, const ShapeInfo& s, const Cone& c) {
  return s.colimit ? B.harr(c.a, s.f) : B.harr(s.f, c.a);
}
int coneCellDst(const FiniteBicategory& B, const ShapeInfo& s, const Cone& c) {
  return s.colimit ? B.harr(c.b, s.g) : B.harr(s.g, c.b);
}

std::vector<Cone> enumerateCones(const FiniteBicategory& B,
                                 const ShapeInfo& s, int W) {
  std::vector<Cone> out;
  std::vector<int> as = s.colimit ? B.homArrows(s.d0, W) : B.homArrows(W, s.d0);
  std::vector<int> bs = s.colimit ? B.homArrows(s.d1, W) : B.homArrows(W, s.d1);
  for (int a : as)
    for (int b : bs) {
      if (!s.hasCell) {
        out.push_back({a, b, -1});
        continue;
      }
      Cone c{a, b, -1};
      for (int t : B.homCells(coneCellSrc(B, s, c), coneCellDst(B, s, c))) {
        if (s.needInvertible && !B.cellInvertible(t)) continue;
        out.push_back({a, b, t});
      }
    }
  return out;
}

// Image of an apex arrow under the comparison functor.
Cone imageCone(const FiniteBicategory& B, const LimitWitness& w,
               const ShapeInfo& s, int h) {
  Cone c;
  if (s.colimit) {
    c.a = B.harr(h, w.leg0);
    c.b = B.harr(h, w.leg1);
    if (s.hasCell) c.cell = B.whiskerArrowCell(h, w.square);
  } else {
    c.a = B.harr(w.leg0, h);
    c.b = B.harr(w.leg1, h);
    if (s.hasCell) c.cell = B.whiskerCellArrow(w.square, h);
  }
  return c;
}

// Image of a 2-cell between apex arrows, componentwise.
std::pair<int, int> imagePair(const FiniteBicategory& B,
                              const LimitWitness& w, const ShapeInfo& s,
                              int d) {
  if (s.colimit)
    return {B.whiskerCellArrow(d, w.leg0), B.whiskerCellArrow(d, w.leg1)};
  return {B.whiskerArrowCell(w.leg0, d), B.whiskerArrowCell(w.leg1, d)};
}

// Whether (p0, p1) is a morphism of cones c1 -> c2, i.e. the square of
// cone cells commutes when the shape has one.
bool coneMorphismOk(const FiniteBicategory& B, const ShapeInfo& s,
                    const Cone& c1, const Cone& c2, int p0, int p1) {
  if (!s.hasCell) return true;
  int left, right;
  if (s.colimit) {
    left = B.vcomp(c2.cell, B.whiskerCellArrow(p0, s.f));
    right = B.vcomp(B.whiskerCellArrow(p1, s.g), c1.cell);
  } else {
    left = B.vcomp(c2.cell, B.whiskerArrowCell(s.f, p0));
    right = B.vcomp(B.whiskerArrowCell(s.g, p1), c1.cell);
  }
  return left >= 0 && left == right;
}

// All factorizations of a cone through the witness: arrows h whose image
// cone maps to the cone by a pair of invertible comparison cells.
struct Factorization {
  int h = -1;
  int iso0 = -1;
  int iso1 = -1;
};

std::vector<Factorization> factorizations(const FiniteBicategory& B,
                                          const LimitWitness& w,
                                          const ShapeInfo& s, int W,
                                          const Cone& cone) {
  std::vector<Factorization> out;
  std::vector<int> hs = s.colimit ? B.homArrows(w.apex, W)
                                  : B.homArrows(W, w.apex);
  for (int h : hs) {
    Cone img = imageCone(B, w, s, h);
    bool found = false;
    for (int i0 : B.homCells(img.a, cone.a)) {
      if (found) break;
      if (!B.cellInvertible(i0)) continue;
      for (int i1 : B.homCells(img.b, cone.b)) {
        if (!B.cellInvertible(i1)) continue;
        if (!coneMorphismOk(B, s, img, cone, i0, i1)) continue;
        out.push_back({h, i0, i1});
        found = true;
        break;
      }
    }
  }
  return out;
}

std::string arrowName(const FiniteBicategory& B, int f) {
  if (f < 0 || static_cast<size_t>(f) >= B.arrows.size()) return "?";
  return B.arrows[f].name;
}

std::string cellName(const FiniteBicategory& B, int a) {
  if (a < 0 || static_cast<size_t>(a) >= B.cells.size()) return "?";
  return B.cells[a].name;
}

std::string describeCone(const FiniteBicategory& B, const Cone& c) {
  std::string out = "(" + arrowName(B, c.a) + ", " + arrowName(B, c.b);
  if (c.cell >= 0) out += ", " + cellName(B, c.cell);
  return out + ")";
}

// hom(apex, W) (or its dual) must be equivalent to the point: nonempty
// with exactly one cell between any two members.
void verifyPointlike(const FiniteBicategory& B, const LimitWitness& w,
                     LimitReport& rep) {
  bool colimit = w.kind == LimitKind::Initial;
  for (size_t W = 0; W < B.objects.size(); ++W) {
    std::vector<int> hs = colimit ? B.homArrows(w.apex, static_cast<int>(W))
                                  : B.homArrows(static_cast<int>(W), w.apex);
    if (hs.empty()) {
      rep.notes.push_back("no arrow for test object " + B.objects[W]);
      continue;
    }
    for (int h1 : hs)
      for (int h2 : hs) {
        size_t n = B.homCells(h1, h2).size();
        if (n != 1)
          rep.notes.push_back("hom(" + arrowName(B, h1) + ", " +
                              arrowName(B, h2) + ") has " +
                              std::to_string(n) + " cells, expected 1");
      }
  }
}

}  // namespace

std::string limitKindName(LimitKind k) {
  return kKindNames[static_cast<int>(k)];
}

std::optional<LimitKind> limitKindFromName(const std::string& n) {
  for (int i = 0; i < 8; ++i)
    if (n == kKindNames[i]) return static_cast<LimitKind>(i);
  return std::nullopt;
}

std::string coneKey(const FiniteBicategory& B, int a, int b, int cell) {
  std::string out = arrowName(B, a);
  if (b >= 0) out += "|" + arrowName(B, b);
  if (cell >= 0) out += "|" + cellName(B, cell);
  return out;
}

LimitReport verify_limit_witness(const FiniteBicategory& B,
                                 const LimitWitness& w, size_t maxCones) {
  LimitReport rep;
  auto fail = [&](const std::string& msg) { rep.notes.push_back(msg); };

  if (w.apex < 0 || static_cast<size_t>(w.apex) >= B.objects.size()) {
    fail("apex out of range");
    rep.status = VerifyStatus::Fail;
    return rep;
  }
  if (w.kind == LimitKind::Initial || w.kind == LimitKind::Terminal) {
    verifyPointlike(B, w, rep);
    rep.status = rep.notes.empty() ? VerifyStatus::Pass : VerifyStatus::Fail;
    return rep;
  }

  auto sOpt = shapeInfo(B, w);
  if (!sOpt) {
    fail("diagram arrows do not form the required span or cospan");
    rep.status = VerifyStatus::Fail;
    return rep;
  }
  ShapeInfo s = *sOpt;

  // Legs and square must connect the diagram to the apex.
  auto legOk = [&](int leg, int from, int to) {
    return leg >= 0 && static_cast<size_t>(leg) < B.arrows.size() &&
           B.arrows[leg].src == from && B.arrows[leg].dst == to;
  };
  bool legsOk = s.colimit ? legOk(w.leg0, s.d0, w.apex) &&
                                legOk(w.leg1, s.d1, w.apex)
                          : legOk(w.leg0, w.apex, s.d0) &&
                                legOk(w.leg1, w.apex, s.d1);
  if (!legsOk) {
    fail("legs do not connect the diagram to the apex");
    rep.status = VerifyStatus::Fail;
    return rep;
  }
  if (s.hasCell) {
    Cone legs{w.leg0, w.leg1, w.square};
    int wantSrc = coneCellSrc(B, s, legs);
    int wantDst = coneCellDst(B, s, legs);
    if (w.square < 0 || static_cast<size_t>(w.square) >= B.cells.size() ||
        B.cells[w.square].src != wantSrc || B.cells[w.square].dst != wantDst) {
      fail("square cell has the wrong boundary");
      rep.status = VerifyStatus::Fail;
      return rep;
    }
    if (s.needInvertible && !B.cellInvertible(w.square)) {
      fail("square cell must be invertible for this kind");
      rep.status = VerifyStatus::Fail;
      return rep;
    }
  }

  size_t conesSeen = 0;
  for (size_t Wi = 0; Wi < B.objects.size(); ++Wi) {
    int W = static_cast<int>(Wi);
    std::vector<int> hs =
        s.colimit ? B.homArrows(w.apex, W) : B.homArrows(W, w.apex);

    // Faithfulness and fullness of the comparison functor.
    for (int h1 : hs)
      for (int h2 : hs) {
        Cone c1 = imageCone(B, w, s, h1);
        Cone c2 = imageCone(B, w, s, h2);
        std::vector<std::pair<int, int>> images;
        for (int d : B.homCells(h1, h2)) {
          auto im = imagePair(B, w, s, d);
          if (std::find(images.begin(), images.end(), im) != images.end())
            fail("not faithful: two cells " + arrowName(B, h1) + " => " +
                 arrowName(B, h2) + " have the same image");
          images.push_back(im);
        }
        for (int p0 : B.homCells(c1.a, c2.a))
          for (int p1 : B.homCells(c1.b, c2.b)) {
            if (!coneMorphismOk(B, s, c1, c2, p0, p1)) continue;
            if (std::find(images.begin(), images.end(),
                          std::make_pair(p0, p1)) == images.end())
              fail("not full: cone morphism (" + cellName(B, p0) + ", " +
                   cellName(B, p1) + ") has no preimage " +
                   arrowName(B, h1) + " => " + arrowName(B, h2));
          }
      }

    // Essential surjectivity, stored choices, essential uniqueness.
    for (const Cone& cone : enumerateCones(B, s, W)) {
      if (++conesSeen > maxCones) {
        rep.status = VerifyStatus::Inconclusive;
        rep.notes.push_back("cone enumeration exceeded the bound");
        return rep;
      }
      auto facts = factorizations(B, w, s, W, cone);
      if (facts.empty()) {
        fail("no factorization for cone " + describeCone(B, cone));
        continue;
      }
      auto it = w.choices.find(coneKey(B, cone.a, cone.b, cone.cell));
      if (it != w.choices.end()) {
        const LimitWitness::Choice& ch = it->second;
        Cone img = imageCone(B, w, s, ch.arrow);
        bool good = ch.iso0 >= 0 && ch.iso1 >= 0 &&
                    B.cellInvertible(ch.iso0) && B.cellInvertible(ch.iso1) &&
                    B.cells[ch.iso0].src == img.a &&
                    B.cells[ch.iso0].dst == cone.a &&
                    B.cells[ch.iso1].src == img.b &&
                    B.cells[ch.iso1].dst == cone.b &&
                    coneMorphismOk(B, s, img, cone, ch.iso0, ch.iso1);
        if (!good)
          fail("stored choice for cone " + describeCone(B, cone) +
               " does not factorize it");
      }
      for (size_t i = 0; i < facts.size(); ++i)
        for (size_t j = i + 1; j < facts.size(); ++j) {
          bool linked = false;
          for (int d : B.homCells(facts[i].h, facts[j].h)) {
            if (!B.cellInvertible(d)) continue;
            auto im = imagePair(B, w, s, d);
            int l0 = B.vcomp(facts[j].iso0, im.first);
            int l1 = B.vcomp(facts[j].iso1, im.second);
            if (l0 == facts[i].iso0 && l1 == facts[i].iso1) {
              linked = true;
              break;
            }
          }
          if (!linked)
            fail("factorizations " + arrowName(B, facts[i].h) + " and " +
                 arrowName(B, facts[j].h) + " of cone " +
                 describeCone(B, cone) + " are not linked by an invertible "
                 "cell");
        }
    }
  }

  // For coproducts, whiskering a factorization must factorize the
  // whiskered cone.
  if (w.kind == LimitKind::coProduct) {
    for (size_t Wi = 0; Wi < B.objects.size() && rep.notes.empty(); ++Wi) {
      int W = static_cast<int>(Wi);
      for (const Cone& cone : enumerateCones(B, s, W)) {
        auto facts = factorizations(B, w, s, W, cone);
        if (facts.empty()) continue;
        int bin = facts.front().h;
        for (size_t h = 0; h < B.arrows.size(); ++h) {
          if (B.arrows[h].src != W) continue;
          int lhs = B.harr(static_cast<int>(h), bin);
          Cone moved{B.harr(static_cast<int>(h), cone.a),
                     B.harr(static_cast<int>(h), cone.b), -1};
          auto movedFacts =
              factorizations(B, w, s, B.arrows[h].dst, moved);
          bool hit = false;
          for (const Factorization& mf : movedFacts)
            if (mf.h == lhs) hit = true;
          if (!hit)
            fail("whiskering by " + arrowName(B, static_cast<int>(h)) +
                 " does not carry the factorization of " +
                 describeCone(B, cone) + " to one of the whiskered cone");
        }
      }
    }
  }

  rep.status = rep.notes.empty() ? VerifyStatus::Pass : VerifyStatus::Fail;
  return rep;
}

std::optional<InducedArrow> induced_arrow(const FiniteBicategory& B,
                                          const LimitWitness& w, int a,
                                          int b, int cell) {
  auto sOpt = shapeInfo(B, w);
  if (!sOpt) return std::nullopt;
  ShapeInfo s = *sOpt;
  auto it = w.choices.find(coneKey(B, a, b, cell));
  if (it != w.choices.end())
    return InducedArrow{it->second.arrow, it->second.iso0, it->second.iso1};
  if (a < 0 || b < 0 || static_cast<size_t>(a) >= B.arrows.size() ||
      static_cast<size_t>(b) >= B.arrows.size())
    return std::nullopt;
  int W = s.colimit ? B.arrows[a].dst : B.arrows[a].src;
  Cone cone{a, b, cell};
  auto facts = factorizations(B, w, s, W, cone);
  if (facts.empty()) return std::nullopt;
  return InducedArrow{facts[0].h, facts[0].iso0, facts[0].iso1};
}

std::optional<LimitWitness> find_limit_witness(const FiniteBicategory& B,
                                               LimitKind kind, int x0,
                                               int x1) {
  auto finish = [&](LimitWitness w) -> std::optional<LimitWitness> {
    // Fill the choice table from the deterministic search before the
    // final verification so shipped witnesses are self-contained.
    auto sOpt = shapeInfo(B, w);
    if (sOpt && kind != LimitKind::Initial && kind != LimitKind::Terminal) {
      for (size_t Wi = 0; Wi < B.objects.size(); ++Wi) {
        for (const Cone& cone : enumerateCones(B, *sOpt, static_cast<int>(Wi))) {
          auto facts =
              factorizations(B, w, *sOpt, static_cast<int>(Wi), cone);
          if (!facts.empty())
            w.choices[coneKey(B, cone.a, cone.b, cone.cell)] =
                LimitWitness::Choice{facts[0].h, facts[0].iso0,
                                     facts[0].iso1};
        }
      }
    }
    if (verify_limit_witness(B, w).ok()) return w;
    return std::nullopt;
  };

  if (kind == LimitKind::Initial || kind == LimitKind::Terminal) {
    for (size_t apex = 0; apex < B.objects.size(); ++apex) {
      LimitWitness w;
      w.kind = kind;
      w.apex = static_cast<int>(apex);
      if (auto done = finish(w)) return done;
    }
    return std::nullopt;
  }

  bool colimit = isColimitKind(kind);
  bool square = isSquareKind(kind);
  int d0, d1;
  if (square) {
    if (x0 < 0 || x1 < 0 || static_cast<size_t>(x0) >= B.arrows.size() ||
        static_cast<size_t>(x1) >= B.arrows.size())
      return std::nullopt;
    d0 = colimit ? B.arrows[x0].dst : B.arrows[x0].src;
    d1 = colimit ? B.arrows[x1].dst : B.arrows[x1].src;
  } else {
    if (x0 < 0 || x1 < 0 || static_cast<size_t>(x0) >= B.objects.size() ||
        static_cast<size_t>(x1) >= B.objects.size())
      return std::nullopt;
    d0 = x0;
    d1 = x1;
  }

  for (size_t apex = 0; apex < B.objects.size(); ++apex) {
    std::vector<int> l0s = colimit ? B.homArrows(d0, static_cast<int>(apex))
                                   : B.homArrows(static_cast<int>(apex), d0);
    std::vector<int> l1s = colimit ? B.homArrows(d1, static_cast<int>(apex))
                                   : B.homArrows(static_cast<int>(apex), d1);
    for (int l0 : l0s)
      for (int l1 : l1s) {
        LimitWitness w;
        w.kind = kind;
        w.apex = static_cast<int>(apex);
        w.leg0 = l0;
        w.leg1 = l1;
        if (square) {
          w.arr0 = x0;
          w.arr1 = x1;
        } else {
          w.obj0 = x0;
          w.obj1 = x1;
        }
        if (!square) {
          if (auto done = finish(w)) return done;
          continue;
        }
        auto sOpt = shapeInfo(B, w);
        if (!sOpt) continue;
        Cone legs{l0, l1, -1};
        for (int sq : B.homCells(coneCellSrc(B, *sOpt, legs),
                                 coneCellDst(B, *sOpt, legs))) {
          if (squareNeedsInvertible(kind) && !B.cellInvertible(sq)) continue;
          w.square = sq;
          if (auto done = finish(w)) return done;
        }
      }
  }
  return std::nullopt;
}

}  // namespace hocat
