#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hocat/finite_bicat.hpp"

namespace hocat {

enum class LimitKind {
  Initial,
  Terminal,
  coProduct,
  Product,
  Pushout,
  Pullback,
  coComma,
  Comma
};

std::string limitKindName(LimitKind k);
std::optional<LimitKind> limitKindFromName(const std::string& n);

// A claimed (co)limit together with the choice of factorization for
// every test cone. Which fields are meaningful depends on the kind:
//   Initial/Terminal   apex only
//   coProduct          obj0, obj1 and legs leg0: obj0 -> apex, leg1: obj1 -> apex
//   Product            obj0, obj1 and legs leg0: apex -> obj0, leg1: apex -> obj1
//   Pushout/coComma    span arr0: Z -> X, arr1: Z -> Y, legs leg0: X -> apex,
//                      leg1: Y -> apex, square: leg0*arr0 => leg1*arr1
//   Pullback/Comma     cospan arr0: X -> Z, arr1: Y -> Z, legs leg0: apex -> X,
//                      leg1: apex -> Y, square: arr0*leg0 => arr1*leg1
// The square cell must be invertible for Pushout and Pullback; Comma and
// coComma squares may be arbitrary.
struct LimitWitness {
  LimitKind kind = LimitKind::Initial;
  int apex = -1;
  int obj0 = -1, obj1 = -1;
  int arr0 = -1, arr1 = -1;
  int leg0 = -1, leg1 = -1;
  int square = -1;

  struct Choice {
    int arrow = -1;
    int iso0 = -1;  // comparison cell for the first leg
    int iso1 = -1;  // and for the second
  };
  // Keyed by coneKey of the test cone the choice factorizes.
  std::map<std::string, Choice> choices;
};

// Deterministic name for a test cone: the one or two cone arrows plus
// the cone cell where the shape has one.
std::string coneKey(const FiniteBicategory& B, int a, int b = -1,
                    int cell = -1);

enum class VerifyStatus { Pass, Fail, Inconclusive };

struct LimitReport {
  VerifyStatus status = VerifyStatus::Pass;
  std::vector<std::string> notes;
  bool ok() const { return status == VerifyStatus::Pass; }
};

// Checks the universal property by enumerating every test cone over the
// finite tables: the comparison functor out of the apex hom-category
// must be faithful, full, and essentially surjective, every stored
// choice must actually factorize its cone through invertible
// comparisons, and any two factorizations of one cone must be linked by
// an invertible cell compatible with the cone. For coProduct witnesses
// the whiskering identity relating a factorization against a further
// composite pair is checked as well. maxCones caps the enumeration;
// hitting the cap yields Inconclusive.
LimitReport verify_limit_witness(const FiniteBicategory& B,
                                 const LimitWitness& w,
                                 size_t maxCones = 100000);

struct InducedArrow {
  int arrow = -1;
  int iso0 = -1;
  int iso1 = -1;
};

// The witness's chosen factorization of the given cone, searched
// deterministically when the witness does not store one. For coProduct
// and Product pass the two cone legs; for the square shapes also the
// cone cell.
std::optional<InducedArrow> induced_arrow(const FiniteBicategory& B,
                                          const LimitWitness& w, int a,
                                          int b = -1, int cell = -1);

// Search mode: tries every apex, leg pair and square cell, filling
// choices deterministically, and returns the first witness that
// verifies. For Initial/Terminal the remaining arguments are ignored;
// for coProduct/Product pass the two objects in x0, x1; for the square
// shapes pass the span or cospan arrows in x0, x1.
std::optional<LimitWitness> find_limit_witness(const FiniteBicategory& B,
                                               LimitKind kind, int x0 = -1,
                                               int x1 = -1);

}  // namespace hocat
