#include "hocat/presented.hpp"

#include <deque>
#include <map>
#include <string>

namespace hocat {

namespace {

// Display concatenation outer ++ inner, assuming outer.src == inner.dst.
Path joinPaths(const Path& outer, const Path& inner) {
  Path out;
  out.dst = outer.gens.empty() ? inner.dst : outer.dst;
  out.src = inner.gens.empty() ? outer.src : inner.src;
  out.gens = outer.gens;
  out.gens.insert(out.gens.end(), inner.gens.begin(), inner.gens.end());
  return out;
}

Layer whiskeredLayer(const Computad&, const Layer& base, const Path& p,
                     const Path& q) {
  Layer out = base;
  out.left = joinPaths(p, base.left);
  out.right = joinPaths(base.right, q);
  return out;
}

// The word the stack reads at height i (before layer i is applied).
Path wordAt(const Computad& c, const Term& t, size_t i) {
  if (i == 0) return t.src;
  return layerDst(c, t.layers[i - 1]);
}

// Replaces the slice of n layers at position i, which must be the left
// side whiskered by (p, q), with the whiskered right side.
std::optional<Term> applyRelationAt(const Computad& c, const Term& t,
                                    size_t i, const Term& from,
                                    const Term& to) {
  size_t n = from.layers.size();
  if (i + n > t.layers.size()) return std::nullopt;
  if (n == 0) return std::nullopt;  // insertions handled separately
  const Layer& s0 = t.layers[i];
  const Layer& f0 = from.layers[0];
  if (s0.gen != f0.gen || s0.inverse != f0.inverse) return std::nullopt;
  if (s0.left.gens.size() < f0.left.gens.size() ||
      s0.right.gens.size() < f0.right.gens.size())
    return std::nullopt;
  size_t np = s0.left.gens.size() - f0.left.gens.size();
  size_t nq = s0.right.gens.size() - f0.right.gens.size();
  Path p = subPath(c, s0.left, 0, np);
  Path q = subPath(c, s0.right, s0.right.gens.size() - nq,
                   s0.right.gens.size());
  for (size_t k = 0; k < n; ++k) {
    const Layer& s = t.layers[i + k];
    const Layer& f = from.layers[k];
    if (s.gen != f.gen || s.inverse != f.inverse) return std::nullopt;
    Layer want = whiskeredLayer(c, f, p, q);
    if (!(s.left == want.left) || !(s.right == want.right))
      return std::nullopt;
  }
  Term out = t;
  out.layers.erase(out.layers.begin() + i, out.layers.begin() + i + n);
  for (size_t k = 0; k < to.layers.size(); ++k)
    out.layers.insert(out.layers.begin() + i + k,
                      whiskeredLayer(c, to.layers[k], p, q));
  return out;
}

// For a relation whose matched side is an identity stack: inserts the
// other side wherever its boundary word occurs inside the word at some
// height.
void insertionMoves(const Computad& c, const Term& t, const Term& from,
                    const Term& to, std::vector<Term>& out) {
  if (!from.layers.empty() || to.layers.empty()) return;
  for (size_t i = 0; i <= t.layers.size(); ++i) {
    Path w = wordAt(c, t, i);
    size_t fn = from.src.gens.size();
    if (fn > w.gens.size()) continue;
    for (size_t at = 0; at + fn <= w.gens.size(); ++at) {
      bool match = true;
      for (size_t k = 0; k < fn; ++k)
        if (w.gens[at + k] != from.src.gens[k]) match = false;
      if (fn == 0) {
        // An empty boundary word only sits at a matching object.
        if (objectAt(c, w, at) != from.src.src) match = false;
      }
      if (!match) continue;
      Path p = subPath(c, w, 0, at);
      Path q = subPath(c, w, at + fn, w.gens.size());
      Term n = t;
      for (size_t k = 0; k < to.layers.size(); ++k)
        n.layers.insert(n.layers.begin() + i + k,
                        whiskeredLayer(c, to.layers[k], p, q));
      out.push_back(std::move(n));
    }
  }
}

}  // namespace

bool PresentedBicategory::validate(std::string* why) const {
  if (!computad.validate(why)) return false;
  for (size_t i = 0; i < relations.size(); ++i) {
    const auto& [l, r] = relations[i];
    std::string sub;
    if (!validTerm(computad, l, &sub) || !validTerm(computad, r, &sub)) {
      if (why) *why = "relation " + std::to_string(i) + ": " + sub;
      return false;
    }
    if (l.src != r.src || l.dst != r.dst) {
      if (why)
        *why = "relation " + std::to_string(i) +
               ": sides have different boundaries";
      return false;
    }
  }
  return true;
}

PresentedEq presented_equal(const PresentedBicategory& P, const Term& a,
                            const Term& b) {
  const Computad& c = P.computad;
  if (a.src != b.src || a.dst != b.dst)
    return PresentedEq::NotEqualWithinBound;
  if (equalInFree(c, a, b)) return PresentedEq::Equal;

  struct Side {
    std::map<std::string, Term> seen;
    std::deque<const Term*> frontier;
  };
  Side sides[2];
  auto add = [&](int s, Term t) -> bool {
    std::string k = termKey(t);
    if (sides[1 - s].seen.count(k)) return true;
    auto [it, fresh] = sides[s].seen.emplace(std::move(k), std::move(t));
    if (fresh) sides[s].frontier.push_back(&it->second);
    return false;
  };
  if (add(0, a)) return PresentedEq::Equal;
  if (add(1, b)) return PresentedEq::Equal;

  auto expand = [&](int s) -> std::optional<PresentedEq> {
    Side& side = sides[s];
    if (side.frontier.empty()) return std::nullopt;
    Term t = *side.frontier.front();
    side.frontier.pop_front();
    std::vector<Term> next;
    for (size_t k = 0; k < t.layers.size(); ++k) {
      for (Term& n : swapMoves(c, t, k)) next.push_back(std::move(n));
      if (auto n = cancelAt(c, t, k)) next.push_back(std::move(*n));
      if (auto n = dropIdAt(c, t, k)) next.push_back(std::move(*n));
    }
    for (const auto& [l, r] : P.relations) {
      for (size_t i = 0; i <= t.layers.size(); ++i) {
        if (auto n = applyRelationAt(c, t, i, l, r))
          next.push_back(std::move(*n));
        if (auto n = applyRelationAt(c, t, i, r, l))
          next.push_back(std::move(*n));
      }
      insertionMoves(c, t, l, r, next);
      insertionMoves(c, t, r, l, next);
    }
    for (Term& n : next)
      if (add(s, std::move(n))) return PresentedEq::Equal;
    return std::nullopt;
  };

  while (true) {
    bool can0 = !sides[0].frontier.empty() &&
                sides[0].seen.size() < P.searchBound;
    bool can1 = !sides[1].frontier.empty() &&
                sides[1].seen.size() < P.searchBound;
    if (!can0 && !can1) return PresentedEq::NotEqualWithinBound;
    if (can0)
      if (auto r = expand(0)) return *r;
    if (can1)
      if (auto r = expand(1)) return *r;
  }
}

}  // namespace hocat
