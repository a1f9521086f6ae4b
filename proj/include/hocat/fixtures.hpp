#pragma once

#include "hocat/finite_bicat.hpp"
#include "hocat/model.hpp"

namespace hocat {

// Built-in table-backed bicategories used by the test suite and the
// command-line tool. Each builder returns a fresh copy.

// One object, its identity arrow, its identity cell.
FiniteBicategory fixT();

// Two objects and a single non-identity arrow between them; only
// identity cells. The strict poset 0 < 1.
FiniteBicategory fixP2();

// One object, arrows {id, u} with u*u = id, and a two-element group of
// cells on every arrow; both compositions add exponents.
FiniteBicategory fixN();

// One object, arrows {id, u} with u*u = id, identity cells only.
FiniteBicategory fixG();

// W = the arrows admitting an equivalence witness, every arrow a
// fibration and a cofibration, limit witnesses filled in by search.
ModelBicategory trivialModel(const FiniteBicategory& B);

// fix-p2 with every arrow in every class. M1 fails: the square with
// identity sides against i = p = a would need a diagonal 1 -> 0.
ModelBicategory fixP2Wall();

// fix-p2 with W = F = all arrows but only identity cofibrations, so
// object 1 is not cofibrant and 0 becomes its cofibrant replacement.
ModelBicategory fixP2WallCofIso();

}  // namespace hocat
