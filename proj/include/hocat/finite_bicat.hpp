#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hocat {

struct FBArrow {
  std::string name;
  int src = -1;
  int dst = -1;
};

// A 2-cell between parallel arrows. src and dst are arrow ids.
struct FBCell {
  std::string name;
  int src = -1;
  int dst = -1;
};

struct CheckReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// A bicategory given by finite composition tables. Horizontal data is
// strict: unit and associativity laws of the tables hold on the nose,
// which check_bicategory verifies rather than assumes. Table entries are
// -1 where the pair is not composable; a missing entry on a composable
// pair is a totality violation.
//
// Orientation: vcomp(b, a) is "b after a" within a hom-category, and
// harr/hcell(l, r) composes r first, matching the way l*r reads.
struct FiniteBicategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<FBArrow> arrows;
  std::vector<FBCell> cells;
  std::vector<int> idArrow;  // per object
  std::vector<int> idCell;   // per arrow
  std::vector<std::vector<int>> vcompT;
  std::vector<std::vector<int>> harrT;
  std::vector<std::vector<int>> hcellT;

  int objId(const std::string& n) const;
  int arrowId(const std::string& n) const;
  int cellId(const std::string& n) const;

  int vcomp(int b, int a) const;
  int harr(int l, int r) const;
  int hcell(int l, int r) const;

  int whiskerArrowCell(int g, int a) const;  // id2(g) * a
  int whiskerCellArrow(int a, int f) const;  // a * id2(f)

  std::vector<int> homArrows(int x, int y) const;
  std::vector<int> homCells(int f, int g) const;

  // Two-sided inverse under vertical composition, if any.
  std::optional<int> inverseCell(int a) const;
  bool cellInvertible(int a) const { return inverseCell(a).has_value(); }

  bool arrowsParallel(int f, int g) const;

  std::string describeArrow(int f) const;
  std::string describeCell(int a) const;

  // Structural sanity: index ranges, boundary consistency of identities
  // and table entries, totality on composable pairs. Axioms live in
  // check_bicategory.
  bool validate(std::string* why = nullptr) const;
};

// Exhaustive axiom check: hom-categories are categories, horizontal
// composition of arrows and cells is strictly unital and associative,
// identities compose to identities, and vertical/horizontal composition
// satisfy the interchange law. Every violated instance is reported.
CheckReport check_bicategory(const FiniteBicategory& B);

struct EquivalenceWitness {
  int f = -1;
  int g = -1;       // quasiinverse
  int unit = -1;    // id_src => g*f, invertible
  int counit = -1;  // f*g => id_dst, invertible
  bool triangles = false;
};

bool verify_equivalence_witness(const FiniteBicategory& B,
                                const EquivalenceWitness& w,
                                std::string* why = nullptr);

// Exhaustive search over quasiinverses and invertible unit/counit pairs;
// prefers witnesses satisfying the triangle identities. Deterministic:
// lowest ids win.
std::optional<EquivalenceWitness> find_equivalence_witness(
    const FiniteBicategory& B, int f);

// True when for every object Z both the post-composition functor
// hom(Z, src f) -> hom(Z, dst f) and the pre-composition functor
// hom(dst f, Z) -> hom(src f, Z) are full and faithful.
bool check_quasiequivalence(const FiniteBicategory& B, int f);

// Reverses every arrow while keeping all ids: hom(X, Y) becomes
// hom(Y, X), horizontal composition transposes, and 2-cells keep their
// direction. Involutive up to the "-op" name suffix.
FiniteBicategory opposite(const FiniteBicategory& B);

}  // namespace hocat
