#pragma once

#include <utility>
#include <vector>

#include "hocat/elevator.hpp"

namespace hocat {

// A computad together with 2-cell relations. Equality of 2-cells is the
// congruence generated by the free-bicategory moves plus both directions
// of every relation; it is only ever decided up to a search bound.
struct PresentedBicategory {
  Computad computad;
  std::vector<std::pair<Term, Term>> relations;
  size_t searchBound = 2000;

  bool validate(std::string* why = nullptr) const;
};

enum class PresentedEq { Equal, NotEqualWithinBound };

// Meet-in-the-middle breadth-first search from both terms, stepping by
// single basic moves and by whiskered contiguous replacements of one
// relation side with the other. Equal is definitive;
// NotEqualWithinBound only says no derivation was found before
// searchBound states were explored on each side.
PresentedEq presented_equal(const PresentedBicategory& P, const Term& a,
                            const Term& b);

}  // namespace hocat
