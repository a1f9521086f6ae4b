#include "doctest.h"

#include <map>
#include <queue>
#include <random>
#include <set>

#include "hocat/elevator.hpp"

using namespace hocat;

namespace {

Computad interchangePad() {
  Computad c;
  c.objects = {"X", "Y", "Z"};
  c.gen1 = {{"f", 0, 1}, {"g", 0, 1}, {"h", 1, 2}, {"k", 1, 2}};
  c.gen2.resize(2);
  c.gen2[0] = {"al", c.makePath({0}), c.makePath({1}), true};
  c.gen2[1] = {"be", c.makePath({2}), c.makePath({3}), true};
  REQUIRE(c.validate());
  return c;
}

// One object, an endo arrow, and 2-generators whose boundaries include
// identity paths; this is where footprints can be empty.
Computad monoidPad() {
  Computad c;
  c.objects = {"X"};
  c.gen1 = {{"e", 0, 0}};
  Path unit = c.idPath(0);
  Path e = c.makePath({0});
  Path ee = c.makePath({0, 0});
  c.gen2.resize(4);
  c.gen2[0] = {"mu", ee, e, false};
  c.gen2[1] = {"eta", unit, e, true};
  c.gen2[2] = {"tau", unit, unit, true};
  c.gen2[3] = {"rho", e, e, false};
  REQUIRE(c.validate());
  return c;
}

// Closure of a term under single basic moves. Swaps are symmetric;
// cancellations and identity-layer drops only shrink the stack, and any
// two equal terms have overlapping downward closures.
std::map<std::string, Term> moveClosure(const Computad& c, const Term& start,
                                        size_t cap = 200000) {
  std::map<std::string, Term> seen;
  std::queue<const Term*> work;
  auto visit = [&](Term t) {
    std::string k = termKey(t);
    auto [it, fresh] = seen.emplace(std::move(k), std::move(t));
    if (fresh) work.push(&it->second);
  };
  visit(start);
  while (!work.empty()) {
    REQUIRE(seen.size() <= cap);
    Term t = *work.front();
    work.pop();
    for (size_t k = 0; k < t.layers.size(); ++k) {
      for (Term& n : swapMoves(c, t, k)) visit(std::move(n));
      if (auto n = cancelAt(c, t, k)) visit(std::move(*n));
      if (auto n = dropIdAt(c, t, k)) visit(std::move(*n));
    }
  }
  return seen;
}

bool closuresMeet(const std::map<std::string, Term>& a,
                  const std::map<std::string, Term>& b) {
  for (const auto& [k, t] : a)
    if (b.count(k)) return true;
  return false;
}

// Appends a random layer whose source footprint occurs in `word`.
bool appendRandomLayer(const Computad& c, Term& t, std::mt19937& rng) {
  Path word = t.dst;
  struct Choice {
    Gen2Id g;
    bool inv;
    size_t at;
  };
  std::vector<Choice> choices;
  for (Gen2Id g = 0; g < static_cast<Gen2Id>(c.gen2.size()); ++g) {
    for (int inv = 0; inv < (c.gen2[g].invertible ? 2 : 1); ++inv) {
      const Path& foot = inv ? c.gen2[g].dst : c.gen2[g].src;
      if (foot.gens.size() > word.gens.size()) continue;
      for (size_t at = 0; at + foot.gens.size() <= word.gens.size(); ++at) {
        bool match = true;
        for (size_t i = 0; i < foot.gens.size(); ++i)
          if (word.gens[at + i] != foot.gens[i]) match = false;
        if (!match) continue;
        choices.push_back({g, inv == 1, at});
      }
    }
  }
  if (choices.empty()) return false;
  Choice pick = choices[rng() % choices.size()];
  const Path& foot =
      pick.inv ? c.gen2[pick.g].dst : c.gen2[pick.g].src;
  Layer l;
  l.gen = pick.g;
  l.inverse = pick.inv;
  l.left.gens.assign(word.gens.begin(), word.gens.begin() + pick.at);
  l.right.gens.assign(word.gens.begin() + pick.at + foot.gens.size(),
                      word.gens.end());
  l.left.dst = word.dst;
  l.left.src = foot.gens.empty()
                   ? (pick.at < word.gens.size()
                          ? c.gen1[word.gens[pick.at]].dst
                          : word.src)
                   : c.gen1[foot.gens.front()].dst;
  l.right.src = word.src;
  l.right.dst = foot.gens.empty()
                    ? l.left.src
                    : c.gen1[foot.gens.back()].src;
  if (layerSrc(c, l) != word) return false;
  t.layers.push_back(l);
  t.dst = layerDst(c, l);
  return true;
}

Term randomTerm(const Computad& c, const Path& base, size_t depth,
                std::mt19937& rng) {
  Term t = idTerm(base);
  for (size_t i = 0; i < depth; ++i) appendRandomLayer(c, t, rng);
  return t;
}

// Rewrites `t` with random class-preserving edits, including insertions
// of cancelling pairs and identity layers, to produce a scrambled member
// of the same class.
Term scramble(const Computad& c, const Term& start, std::mt19937& rng,
              size_t steps) {
  Term t = start;
  for (size_t s = 0; s < steps; ++s) {
    switch (rng() % 4) {
      case 0: {
        if (t.layers.empty()) break;
        size_t k = rng() % t.layers.size();
        auto moves = swapMoves(c, t, k);
        if (!moves.empty()) t = moves[rng() % moves.size()];
        break;
      }
      case 1: {
        if (t.layers.empty()) break;
        size_t k = rng() % t.layers.size();
        if (auto n = cancelAt(c, t, k)) t = *n;
        break;
      }
      case 2: {
        // Insert a cancelling pair at a random height.
        size_t k = rng() % (t.layers.size() + 1);
        Path word = t.src;
        for (size_t i = 0; i < k; ++i) word = layerDst(c, t.layers[i]);
        Term probe = idTerm(word);
        if (!appendRandomLayer(c, probe, rng)) break;
        Layer first = probe.layers[0];
        if (!c.gen2[first.gen].invertible) break;
        Layer second = first;
        second.inverse = !second.inverse;
        t.layers.insert(t.layers.begin() + k, {first, second});
        break;
      }
      default: {
        size_t k = rng() % (t.layers.size() + 1);
        Path word = t.src;
        for (size_t i = 0; i < k; ++i) word = layerDst(c, t.layers[i]);
        t.layers.insert(t.layers.begin() + k, idLayer(word));
        break;
      }
    }
  }
  return t;
}

}  // namespace

TEST_CASE("layer boundaries and term validation") {
  Computad c = interchangePad();
  Term al = genTerm(c, 0);
  CHECK(validTerm(c, al));
  CHECK(al.src == c.makePath({0}));
  CHECK(al.dst == c.makePath({1}));
  Term bad = al;
  bad.dst = c.makePath({0});
  CHECK_FALSE(validTerm(c, bad));
}

TEST_CASE("horizontal composition satisfies interchange") {
  Computad c = interchangePad();
  Term al = genTerm(c, 0);
  Term be = genTerm(c, 1);
  auto both = hcomp(c, be, al);
  REQUIRE(both.has_value());
  CHECK(validTerm(c, *both));

  // Whisker one side first, then the other, in each order.
  Term lower = whiskerRight(c, be, al.src);
  Term upperAfter = whiskerLeft(c, be.dst, al);
  auto order1 = vcomp(c, upperAfter, lower);
  Term lower2 = whiskerLeft(c, be.src, al);
  Term upper2 = whiskerRight(c, be, al.dst);
  auto order2 = vcomp(c, upper2, lower2);
  REQUIRE(order1.has_value());
  REQUIRE(order2.has_value());
  CHECK(equalInFree(c, *order1, *order2));
  CHECK(equalInFree(c, *both, *order2));
  CHECK_FALSE(equalInFree(c, *order1, whiskerRight(c, be, al.src)));
}

TEST_CASE("horizontal composition is associative on the nose") {
  Computad c = interchangePad();
  c.objects.push_back("W");
  c.gen1.push_back({"l", 2, 3});
  c.gen1.push_back({"m", 2, 3});
  c.gen2.push_back({"ga", c.makePath({4}), c.makePath({5}), false});
  REQUIRE(c.validate());
  Term al = genTerm(c, 0);
  Term be = genTerm(c, 1);
  Term ga = genTerm(c, 2);
  auto left = hcomp(c, *hcomp(c, ga, be), al);
  auto right = hcomp(c, ga, *hcomp(c, be, al));
  REQUIRE(left.has_value());
  REQUIRE(right.has_value());
  CHECK(*left == *right);
}

TEST_CASE("formal inverses cancel") {
  Computad c = interchangePad();
  Term al = genTerm(c, 0);
  Term inv = invertTerm(al);
  auto round = vcomp(c, inv, al);
  REQUIRE(round.has_value());
  Term n = normalized(c, *round);
  CHECK(n.layers.empty());
  CHECK(n.src == al.src);

  auto both = hcomp(c, genTerm(c, 1), al);
  auto back = vcomp(c, invertTerm(*both), *both);
  REQUIRE(back.has_value());
  CHECK(normalized(c, *back).layers.empty());
}

TEST_CASE("normal form is idempotent and boundary preserving") {
  Computad c = monoidPad();
  std::mt19937 rng(0xC0FFEE);
  Path base = c.makePath({0, 0, 0});
  for (int trial = 0; trial < 200; ++trial) {
    Term t = randomTerm(c, base, 1 + rng() % 5, rng);
    REQUIRE(validTerm(c, t));
    Term n1 = normalized(c, t);
    CHECK(validTerm(c, n1));
    CHECK(n1.src == t.src);
    CHECK(n1.dst == t.dst);
    Term n2 = normalized(c, n1);
    CHECK(n1 == n2);
  }
}

TEST_CASE("scrambled terms keep their normal form") {
  Computad pads[] = {interchangePad(), monoidPad()};
  std::mt19937 rng(0x5EED);
  for (const Computad& c : pads) {
    Path base = c.gen2[0].src;
    for (int trial = 0; trial < 120; ++trial) {
      Term t = randomTerm(c, base, 1 + rng() % 4, rng);
      Term s = scramble(c, t, rng, 1 + rng() % 8);
      REQUIRE(validTerm(c, s));
      CHECK(equalInFree(c, t, s));
    }
  }
}

TEST_CASE("normal-form equality agrees with the move-closure oracle") {
  Computad pads[] = {interchangePad(), monoidPad()};
  std::mt19937 rng(0xABCD);
  for (const Computad& c : pads) {
    Path base = c.gen2[0].src;
    for (int trial = 0; trial < 60; ++trial) {
      Term a = randomTerm(c, base, 1 + rng() % 4, rng);
      Term b = randomTerm(c, base, 1 + rng() % 4, rng);
      if (a.dst != b.dst) continue;
      auto ca = moveClosure(c, a);
      auto cb = moveClosure(c, b);
      bool oracle = closuresMeet(ca, cb);
      CHECK(equalInFree(c, a, b) == oracle);
      // Every member of a closure shares the normal form of its seed.
      for (const auto& [key, member] : ca) {
        if (!equalInFree(c, a, member)) {
          CAPTURE(termKey(a));
          CAPTURE(key);
          CHECK(equalInFree(c, a, member));
          break;
        }
      }
    }
  }
}

TEST_CASE("identity-boundary cells commute past everything disjoint") {
  Computad c = monoidPad();
  // tau acts on the identity at the far left, rho on the strand.
  Path e = c.makePath({0});
  Term tau = genTerm(c, 2);
  Term rho = genTerm(c, 3);
  auto a = hcomp(c, tau, rho);
  auto b = vcomp(c, whiskerRight(c, tau, e),
                 whiskerLeft(c, c.idPath(0), rho));
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(equalInFree(c, *a, *b));
}

TEST_CASE("elevator rendering shows strands and labels") {
  Computad c = interchangePad();
  auto both = hcomp(c, genTerm(c, 1), genTerm(c, 0));
  REQUIRE(both.has_value());
  std::string art = renderElevator(c, *both);
  CHECK(art.find("al") != std::string::npos);
  CHECK(art.find("be") != std::string::npos);
  CHECK(art.find('|') != std::string::npos);
  size_t lines = std::count(art.begin(), art.end(), '\n');
  CHECK(lines == 2 * both->layers.size() + 1);
  std::string idArt = renderElevator(c, idTerm(c.makePath({0})));
  CHECK(idArt == "f\n");
}
