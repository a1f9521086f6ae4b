#pragma once

#include "hocat/computad.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hocat {

// One horizontal slice of a 2-cell pasting: a single generator, possibly
// formally inverted, with identity whiskers on both sides. `left` is
// composed after the generator (drawn to its left), `right` before it.
// A layer with gen < 0 is an identity slice; its strands live in the
// whiskers and it disappears under normalization.
struct Layer {
  Path left;
  Gen2Id gen = -1;
  bool inverse = false;
  Path right;

  bool operator==(const Layer&) const = default;
};

// A 2-cell of the free bicategory on a computad, in strictified form: a
// vertical stack of whiskered generator layers, layers.front() applied
// first. An empty stack is the identity 2-cell on src == dst.
struct Term {
  Path src;
  Path dst;
  std::vector<Layer> layers;

  bool operator==(const Term&) const = default;
};

// Boundary paths of one layer, orientation-aware.
Path layerSrc(const Computad& c, const Layer& l);
Path layerDst(const Computad& c, const Layer& l);

bool validTerm(const Computad& c, const Term& t, std::string* why = nullptr);

Term idTerm(const Path& p);
Term genTerm(const Computad& c, Gen2Id g, bool inverse = false);
Layer idLayer(const Path& p);

// second after first; nullopt when boundaries do not chain.
std::optional<Term> vcomp(const Computad& c, const Term& second,
                          const Term& first);
// lhs * rhs with rhs applied first; lhs's layers run above rhs's.
std::optional<Term> hcomp(const Computad& c, const Term& lhs, const Term& rhs);
Term whiskerLeft(const Computad& c, const Path& p, const Term& t);
Term whiskerRight(const Computad& c, const Term& t, const Path& p);
Term invertTerm(const Term& t);

// Rewrites the term to its freely reduced, left-canonical form: identity
// layers dropped, adjacent inverse pairs cancelled, and among adjacent
// independent layers the one acting further left placed first. Returns
// whether anything changed. Idempotent.
bool normalizeInPlace(const Computad& c, Term& t);
Term normalized(const Computad& c, const Term& t);

// Equality in the free bicategory on the computad. Stacks without
// identity-boundary cells compare by normal form; in the presence of
// such cells exchange orientations are ambiguous and equality falls back
// to intersecting the basic-move closures of both sides.
bool equalInFree(const Computad& c, const Term& a, const Term& b);

// Single basic-move applications, used by the closure oracle in tests and
// by bounded search over presented backends. `swapMoves` returns every
// term reachable by exchanging layers k and k+1 (their footprints must be
// disjoint; an abutting pair with an empty footprint can admit two
// distinct exchanges); `cancelAt` removes layers k, k+1 when they are
// exact formal inverses; `dropIdAt` removes an identity layer.
std::vector<Term> swapMoves(const Computad& c, const Term& t, size_t k);
std::optional<Term> cancelAt(const Computad& c, const Term& t, size_t k);
std::optional<Term> dropIdAt(const Computad& c, const Term& t, size_t k);

// Canonical serialization, suitable as a hash/map key.
std::string termKey(const Term& t);

// Fixed-width text rendering: boundary paths interleaved with layer rows,
// whiskered strands drawn as '|', generator names centered under their
// footprint, '~' prefix marking a formal inverse.
std::string renderElevator(const Computad& c, const Term& t);

}  // namespace hocat
