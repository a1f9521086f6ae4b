#pragma once

#include "hocat/axioms.hpp"
#include "hocat/finite_bicat.hpp"
#include "hocat/presented.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hocat {

// A pseudofunctor between finite bicategories. The three maps are total
// on ids of the source; xi and phi are the invertible comparison cells
//   xi[X]     : id_{FX} => F(id_X)
//   phi[{g,f}]: Fg * Ff => F(g*f),  one per composable pair, keyed
//               (outer, inner) to match harr(l, r).
// Hom maps must be strictly functorial (identities and vertical
// composition on the nose); composition of arrows is only respected up
// to phi. check_pseudofunctor verifies all of it.
struct Pseudofunctor {
  std::string name;
  std::vector<int> objMap;
  std::vector<int> arrMap;
  std::vector<int> cellMap;
  std::vector<int> xi;
  std::map<std::pair<int, int>, int> phi;
};

Pseudofunctor identity_functor(const FiniteBicategory& B);

// Fills xi and phi with identity cells. Only meaningful when the maps
// already preserve identities and horizontal composition strictly;
// otherwise the comparison cells fail their boundary check.
void fill_strict_mediators(const FiniteBicategory& C,
                           const FiniteBicategory& D, Pseudofunctor& F);

// True when every xi and phi entry is an identity cell and the arrow map
// preserves identity arrows and horizontal composites on the nose.
bool is_strict(const FiniteBicategory& C, const FiniteBicategory& D,
               const Pseudofunctor& F);

// G after F, for F: C -> D and G: D -> E.
Pseudofunctor compose_functors(const FiniteBicategory& C,
                               const FiniteBicategory& D,
                               const FiniteBicategory& E,
                               const Pseudofunctor& G,
                               const Pseudofunctor& F);

// Exhaustive check over the finite source: hom functoriality, boundary
// and invertibility of xi/phi, unit coherence on both sides, coherence
// over every composable triple, and naturality of phi over every
// horizontally composable pair of cells.
AxiomReport check_pseudofunctor(const FiniteBicategory& C,
                                  const FiniteBicategory& D,
                                  const Pseudofunctor& F);

// Every strict 2-functor C -> D, in lexicographic order of the object,
// arrow and cell assignments. Feasible because the table bicategories in
// this codebase have a handful of cells; do not point it at anything big.
std::vector<Pseudofunctor> enumerate_strict_functors(
    const FiniteBicategory& C, const FiniteBicategory& D);

// theta: F => G. thetaX[X] is an arrow FX -> GX of the target, and
// thetaF[f] an invertible cell  Gf * theta_X => theta_Y * Ff  for each
// source arrow f: X -> Y.
struct PseudonaturalTransformation {
  std::string name;
  std::vector<int> thetaX;
  std::vector<int> thetaF;
};

PseudonaturalTransformation identity_transformation(
    const FiniteBicategory& C, const FiniteBicategory& D,
    const Pseudofunctor& F);

struct TransformationReport {
  AxiomReport checks;
  bool equivalence = false;
  std::string equivalenceNote;

  bool ok() const { return checks.ok(); }
};

// Checks the unit, composition and naturality axioms of a pseudonatural
// transformation instance by instance, and reports additionally whether
// every component theta_X is an equivalence of the target (which is what
// makes theta itself one).
TransformationReport check_pseudonatural(const FiniteBicategory& C,
                                         const FiniteBicategory& D,
                                         const Pseudofunctor& F,
                                         const Pseudofunctor& G,
                                         const PseudonaturalTransformation& t);

// rho: theta -> eta, a cell rhoX[X]: theta_X => eta_X per source object.
struct Modification {
  std::string name;
  std::vector<int> rhoX;
};

AxiomReport check_modification(const FiniteBicategory& C,
                                 const FiniteBicategory& D,
                                 const Pseudofunctor& F,
                                 const Pseudofunctor& G,
                                 const PseudonaturalTransformation& theta,
                                 const PseudonaturalTransformation& eta,
                                 const Modification& rho);

// A pseudofunctor out of the free bicategory on a computad into a finite
// bicategory. Arrow images of paths multiply out the generator images,
// so F(g*f) equals Fg*Ff as arrows and the comparison cells are
// automorphisms: xi[X] of id_{FX}, phi[{g,h}] of Fg*Fh per chaining
// generator pair (outer, inner).
struct FreePseudofunctor {
  std::string name;
  std::vector<int> objMap;
  std::vector<int> arrMap;
  std::vector<int> cellMap;
  std::vector<int> xi;
  std::map<std::pair<int, int>, int> phi;
};

FreePseudofunctor strict_free_functor(const Computad& c,
                                      const FiniteBicategory& D,
                                      std::vector<int> objMap,
                                      std::vector<int> arrMap,
                                      std::vector<int> cellMap,
                                      std::string name = "");

// Image of a path: the target-side horizontal composite of the
// generator images. Throws on an unmapped generator.
int functor_arrow(const Computad& c, const FiniteBicategory& D,
                  const FreePseudofunctor& F, const Path& p);

// The canonical comparison cell for a whole word: xi on the empty word,
// identity on single generators, and on longer words the right-nested
// vertical composite of pair mediators fixed by the coherence axiom.
// With all stored mediators identities this is an identity cell.
int word_mediator(const Computad& c, const FiniteBicategory& D,
                  const FreePseudofunctor& F, const Path& p);

// Image of a 2-cell term: the whiskered generator images stacked in
// order, conjugated by the word mediators of the boundary words. Strict
// in vertical composition; respects the free-bicategory moves because
// the target satisfies interchange. Throws on unmapped data or when an
// inverse layer's image is not invertible.
int evaluate_functor(const Computad& c, const FiniteBicategory& D,
                     const FreePseudofunctor& F, const Term& t);

// Structural check of a free-source pseudofunctor plus, for a presented
// source, the well-definedness sweep: both sides of every relation must
// evaluate to the same target cell.
AxiomReport check_free_functor(const PresentedBicategory& P,
                                 const FiniteBicategory& D,
                                 const FreePseudofunctor& F);

}  // namespace hocat
