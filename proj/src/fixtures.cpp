#include "hocat/fixtures.hpp"

#include <algorithm>
#include <functional>

namespace hocat {

namespace {

// Fills every composable entry of the three tables from the given rules
// and leaves -1 elsewhere.
void fillTables(FiniteBicategory& B,
                const std::function<int(int, int)>& vc,
                const std::function<int(int, int)>& ha,
                const std::function<int(int, int)>& hc) {
  size_t na = B.arrows.size(), nc = B.cells.size();
  B.vcompT.assign(nc, std::vector<int>(nc, -1));
  B.harrT.assign(na, std::vector<int>(na, -1));
  B.hcellT.assign(nc, std::vector<int>(nc, -1));
  for (size_t b = 0; b < nc; ++b)
    for (size_t a = 0; a < nc; ++a)
      if (B.cells[b].src == B.cells[a].dst)
        B.vcompT[b][a] = vc(static_cast<int>(b), static_cast<int>(a));
  for (size_t l = 0; l < na; ++l)
    for (size_t r = 0; r < na; ++r)
      if (B.arrows[l].src == B.arrows[r].dst)
        B.harrT[l][r] = ha(static_cast<int>(l), static_cast<int>(r));
  for (size_t l = 0; l < nc; ++l)
    for (size_t r = 0; r < nc; ++r)
      if (B.arrows[B.cells[l].src].src == B.arrows[B.cells[r].src].dst)
        B.hcellT[l][r] = hc(static_cast<int>(l), static_cast<int>(r));
}

}  // namespace

FiniteBicategory fixT() {
  FiniteBicategory B;
  B.name = "fix-t";
  B.objects = {"X"};
  B.arrows = {{"id_X", 0, 0}};
  B.cells = {{"i_id_X", 0, 0}};
  B.idArrow = {0};
  B.idCell = {0};
  fillTables(
      B, [](int, int) { return 0; }, [](int, int) { return 0; },
      [](int, int) { return 0; });
  return B;
}

FiniteBicategory fixP2() {
  FiniteBicategory B;
  B.name = "fix-p2";
  B.objects = {"o0", "o1"};
  B.arrows = {{"id_o0", 0, 0}, {"id_o1", 1, 1}, {"a", 0, 1}};
  B.cells = {{"i_id_o0", 0, 0}, {"i_id_o1", 1, 1}, {"i_a", 2, 2}};
  B.idArrow = {0, 1};
  B.idCell = {0, 1, 2};
  auto ha = [&B](int l, int r) {
    // At most one arrow per hom, so composition is forced.
    int src = B.arrows[r].src, dst = B.arrows[l].dst;
    for (size_t i = 0; i < B.arrows.size(); ++i)
      if (B.arrows[i].src == src && B.arrows[i].dst == dst)
        return static_cast<int>(i);
    return -1;
  };
  fillTables(
      B, [](int b, int) { return b; }, ha,
      [&B, ha](int l, int r) {
        return B.idCell[ha(B.cells[l].src, B.cells[r].src)];
      });
  return B;
}

FiniteBicategory fixN() {
  FiniteBicategory B;
  B.name = "fix-n";
  B.objects = {"X"};
  B.arrows = {{"id_X", 0, 0}, {"u", 0, 0}};
  // Cell 2k+e is the exponent-e cell on arrow k.
  B.cells = {{"i_id_X", 0, 0}, {"s", 0, 0}, {"i_u", 1, 1}, {"t", 1, 1}};
  B.idArrow = {0};
  B.idCell = {0, 2};
  auto arrOf = [](int c) { return c / 2; };
  auto expOf = [](int c) { return c % 2; };
  fillTables(
      B,
      [&](int b, int a) { return 2 * arrOf(a) + (expOf(b) + expOf(a)) % 2; },
      [](int l, int r) { return l ^ r; },
      [&](int l, int r) {
        return 2 * (arrOf(l) ^ arrOf(r)) + (expOf(l) + expOf(r)) % 2;
      });
  return B;
}

FiniteBicategory fixG() {
  FiniteBicategory B;
  B.name = "fix-g";
  B.objects = {"X"};
  B.arrows = {{"id_X", 0, 0}, {"u", 0, 0}};
  B.cells = {{"i_id_X", 0, 0}, {"i_u", 1, 1}};
  B.idArrow = {0};
  B.idCell = {0, 1};
  fillTables(
      B, [](int b, int) { return b; }, [](int l, int r) { return l ^ r; },
      [](int l, int r) { return l ^ r; });
  return B;
}

ModelBicategory trivialModel(const FiniteBicategory& B) {
  ModelBicategory M;
  M.B = B;
  size_t nA = B.arrows.size();
  M.cls.isW.assign(nA, 0);
  for (size_t f = 0; f < nA; ++f)
    if (find_equivalence_witness(B, static_cast<int>(f))) M.cls.isW[f] = 1;
  M.cls.isF.assign(nA, 1);
  M.cls.isCoF.assign(nA, 1);
  register_limits(M);
  return M;
}

ModelBicategory fixP2Wall() {
  ModelBicategory M = trivialModel(fixP2());
  M.B.name = "fix-p2-wall";
  std::fill(M.cls.isW.begin(), M.cls.isW.end(), 1);
  return M;
}

ModelBicategory fixP2WallCofIso() {
  ModelBicategory M = fixP2Wall();
  M.B.name = "fix-p2-wall-cofiso";
  std::fill(M.cls.isCoF.begin(), M.cls.isCoF.end(), 0);
  for (size_t x = 0; x < M.B.objects.size(); ++x)
    M.cls.isCoF[M.B.idArrow[x]] = 1;
  return M;
}

}  // namespace hocat
