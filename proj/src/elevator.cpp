#include "hocat/elevator.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hocat {

namespace {

Path slicePath(const Computad& c, const Path& whole, size_t i, size_t j) {
  return subPath(c, whole, i, j);
}

Path concatPaths(const Computad& c, std::initializer_list<const Path*> parts) {
  // Display order: earlier entries are composed after later ones.
  Path out;
  out.src = -1;
  out.dst = -1;
  for (const Path* p : parts) {
    if (out.dst < 0) out.dst = p->dst;
    out.src = p->src;
    out.gens.insert(out.gens.end(), p->gens.begin(), p->gens.end());
  }
  (void)c;
  return out;
}

Path footSrc(const Computad& c, const Layer& l) {
  const Gen2& g = c.gen2[l.gen];
  return l.inverse ? g.dst : g.src;
}

Path footDst(const Computad& c, const Layer& l) {
  const Gen2& g = c.gen2[l.gen];
  return l.inverse ? g.src : g.dst;
}

}  // namespace

Path layerSrc(const Computad& c, const Layer& l) {
  if (l.gen < 0) return concatPaths(c, {&l.left, &l.right});
  Path f = footSrc(c, l);
  return concatPaths(c, {&l.left, &f, &l.right});
}

Path layerDst(const Computad& c, const Layer& l) {
  if (l.gen < 0) return concatPaths(c, {&l.left, &l.right});
  Path f = footDst(c, l);
  return concatPaths(c, {&l.left, &f, &l.right});
}

bool validTerm(const Computad& c, const Term& t, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!c.validPath(t.src, why)) return false;
  if (!c.validPath(t.dst, why)) return false;
  Path cur = t.src;
  for (size_t i = 0; i < t.layers.size(); ++i) {
    const Layer& l = t.layers[i];
    if (l.gen >= static_cast<Gen2Id>(c.gen2.size()))
      return fail("layer " + std::to_string(i) + ": no such 2-generator");
    if (l.gen >= 0 && l.inverse && !c.gen2[l.gen].invertible)
      return fail("layer " + std::to_string(i) +
                  ": inverse of a non-invertible 2-generator");
    if (!c.validPath(l.left, why)) return false;
    if (!c.validPath(l.right, why)) return false;
    if (l.gen >= 0) {
      Path f = footSrc(c, l);
      if (l.right.dst != f.src || f.dst != l.left.src)
        return fail("layer " + std::to_string(i) + ": whiskers do not chain");
    } else {
      if (l.right.dst != l.left.src)
        return fail("layer " + std::to_string(i) + ": whiskers do not chain");
    }
    if (layerSrc(c, l) != cur)
      return fail("layer " + std::to_string(i) +
                  " does not start where the previous layer ended");
    cur = layerDst(c, l);
  }
  if (cur != t.dst) return fail("stack does not end at the declared target");
  return true;
}

Term idTerm(const Path& p) {
  Term t;
  t.src = p;
  t.dst = p;
  return t;
}

Layer idLayer(const Path& p) {
  Layer l;
  l.left = p;
  l.gen = -1;
  l.right.src = p.src;
  l.right.dst = p.src;
  return l;
}

Term genTerm(const Computad& c, Gen2Id g, bool inverse) {
  Term t;
  const Gen2& cell = c.gen2[g];
  t.src = inverse ? cell.dst : cell.src;
  t.dst = inverse ? cell.src : cell.dst;
  Layer l;
  l.gen = g;
  l.inverse = inverse;
  l.left.src = t.src.dst;
  l.left.dst = t.src.dst;
  l.right.src = t.src.src;
  l.right.dst = t.src.src;
  t.layers.push_back(l);
  return t;
}

std::optional<Term> vcomp(const Computad& c, const Term& second,
                          const Term& first) {
  (void)c;
  if (first.dst != second.src) return std::nullopt;
  Term out;
  out.src = first.src;
  out.dst = second.dst;
  out.layers = first.layers;
  out.layers.insert(out.layers.end(), second.layers.begin(),
                    second.layers.end());
  return out;
}

Term whiskerLeft(const Computad& c, const Path& p, const Term& t) {
  Term out;
  out.src = concatPaths(c, {&p, &t.src});
  out.dst = concatPaths(c, {&p, &t.dst});
  out.layers = t.layers;
  for (Layer& l : out.layers) l.left = concatPaths(c, {&p, &l.left});
  return out;
}

Term whiskerRight(const Computad& c, const Term& t, const Path& p) {
  Term out;
  out.src = concatPaths(c, {&t.src, &p});
  out.dst = concatPaths(c, {&t.dst, &p});
  out.layers = t.layers;
  for (Layer& l : out.layers) l.right = concatPaths(c, {&l.right, &p});
  return out;
}

std::optional<Term> hcomp(const Computad& c, const Term& lhs, const Term& rhs) {
  if (lhs.src.src != rhs.src.dst) return std::nullopt;
  Term a = whiskerRight(c, lhs, rhs.src);
  Term b = whiskerLeft(c, lhs.dst, rhs);
  return vcomp(c, b, a);
}

Term invertTerm(const Term& t) {
  Term out;
  out.src = t.dst;
  out.dst = t.src;
  out.layers.assign(t.layers.rbegin(), t.layers.rend());
  for (Layer& l : out.layers)
    if (l.gen >= 0) l.inverse = !l.inverse;
  return out;
}

namespace {

struct SwapResult {
  Layer first;
  Layer second;
};

// Exchange an adjacent pair (u applied first, w second) whose footprints
// are disjoint, with w acting inside u's left whisker.
std::optional<SwapResult> swapLeftCase(const Computad& c, const Layer& u,
                                       const Layer& w) {
  if (u.gen < 0 || w.gen < 0) return std::nullopt;
  Path a = footSrc(c, u), ap = footDst(c, u);
  Path b = footSrc(c, w), bp = footDst(c, w);
  size_t l1 = u.left.gens.size(), l2 = w.left.gens.size();
  if (l2 + b.gens.size() > l1) return std::nullopt;
  Path m = slicePath(c, u.left, l2 + b.gens.size(), l1);
  SwapResult r;
  r.first.left = w.left;
  r.first.gen = w.gen;
  r.first.inverse = w.inverse;
  r.first.right = concatPaths(c, {&m, &a, &u.right});
  r.second.left = concatPaths(c, {&w.left, &bp, &m});
  r.second.gen = u.gen;
  r.second.inverse = u.inverse;
  r.second.right = u.right;
  (void)ap;
  return r;
}

// Same exchange with w acting inside u's right whisker.
std::optional<SwapResult> swapRightCase(const Computad& c, const Layer& u,
                                        const Layer& w) {
  if (u.gen < 0 || w.gen < 0) return std::nullopt;
  Path a = footSrc(c, u), ap = footDst(c, u);
  Path b = footSrc(c, w), bp = footDst(c, w);
  size_t l1 = u.left.gens.size(), l2 = w.left.gens.size();
  if (l2 < l1 + ap.gens.size()) return std::nullopt;
  Path m = slicePath(c, w.left, l1 + ap.gens.size(), l2);
  SwapResult r;
  r.first.left = concatPaths(c, {&u.left, &a, &m});
  r.first.gen = w.gen;
  r.first.inverse = w.inverse;
  r.first.right = w.right;
  r.second.left = u.left;
  r.second.gen = u.gen;
  r.second.inverse = u.inverse;
  r.second.right = concatPaths(c, {&m, &bp, &w.right});
  (void)b;
  return r;
}

bool layersCancel(const Computad& c, const Layer& u, const Layer& w) {
  (void)c;
  return u.gen >= 0 && u.gen == w.gen && u.inverse != w.inverse &&
         u.left == w.left && u.right == w.right;
}

// Drops identity layers and cancels adjacent formal-inverse pairs.
bool freelyReduce(const Computad& c, std::vector<Layer>& layers) {
  std::vector<Layer> out;
  out.reserve(layers.size());
  bool changed = false;
  for (Layer& l : layers) {
    if (l.gen < 0) {
      changed = true;
      continue;
    }
    if (!out.empty() && layersCancel(c, out.back(), l)) {
      out.pop_back();
      changed = true;
      continue;
    }
    out.push_back(std::move(l));
  }
  layers = std::move(out);
  return changed;
}

// Exchanges the pair (u, w) so that w comes first. For layers whose
// footprints are both nonempty at most one orientation fits.
std::optional<SwapResult> swapEither(const Computad& c, const Layer& u,
                                     const Layer& w) {
  if (auto s = swapLeftCase(c, u, w)) return s;
  return swapRightCase(c, u, w);
}

bool anyEmptyFootprint(const Computad& c, const std::vector<Layer>& layers) {
  for (const Layer& l : layers)
    if (l.gen >= 0 &&
        (footSrc(c, l).gens.empty() || footDst(c, l).gens.empty()))
      return true;
  return false;
}

// Canonical order for stacks without identity-boundary cells: repeatedly
// emit the schedulable layer whose front position is leftmost. A layer is
// schedulable when it exchanges past every layer before it; for nonempty
// footprints the front form is unique and front anchors of distinct
// candidates never collide.
void greedySort(const Computad& c, std::vector<Layer>& layers) {
  std::vector<Layer> out;
  out.reserve(layers.size());
  std::vector<Layer> work = layers;
  while (!work.empty()) {
    size_t best = 0;
    bool haveBest = false;
    std::tuple<size_t, Gen2Id, bool> bestKey{};
    for (size_t k = 0; k < work.size(); ++k) {
      Layer cur = work[k];
      bool ok = true;
      for (size_t j = k; j-- > 0;) {
        auto s = swapEither(c, work[j], cur);
        if (!s) {
          ok = false;
          break;
        }
        cur = s->first;
      }
      if (!ok) continue;
      auto key =
          std::make_tuple(cur.left.gens.size(), cur.gen, cur.inverse);
      if (!haveBest || key < bestKey) {
        haveBest = true;
        bestKey = key;
        best = k;
      }
    }
    assert(haveBest);
    for (size_t j = best; j-- > 0;) {
      auto s = swapEither(c, work[j], work[j + 1]);
      assert(s);
      work[j] = s->first;
      work[j + 1] = s->second;
    }
    out.push_back(work.front());
    work.erase(work.begin());
  }
  layers = std::move(out);
}

std::pair<size_t, std::string> stackRank(const Term& t) {
  return {t.layers.size(), termKey(t)};
}

// Everything reachable from t by single basic moves, keyed by
// serialization. Optionally stops early once a key in `meet` is found
// (leaving the closure partial), which is all the equality test needs.
std::map<std::string, Term> moveClosure(
    const Computad& c, const Term& t,
    const std::map<std::string, Term>* meet = nullptr, bool* met = nullptr) {
  std::map<std::string, Term> seen;
  std::vector<const Term*> work;
  auto first = seen.emplace(termKey(t), t).first;
  if (meet && meet->count(first->first)) {
    if (met) *met = true;
    return seen;
  }
  work.push_back(&first->second);
  size_t head = 0;
  while (head < work.size()) {
    if (seen.size() > 500000)
      throw std::runtime_error(
          "2-cell normal form: move closure is too large");
    const Term cur = *work[head++];
    bool done = false;
    auto visit = [&](Term n) {
      std::string k = termKey(n);
      if (meet && meet->count(k)) {
        if (met) *met = true;
        done = true;
        return;
      }
      auto [it, fresh] = seen.emplace(std::move(k), std::move(n));
      if (fresh) work.push_back(&it->second);
    };
    for (size_t k = 0; k < cur.layers.size() && !done; ++k) {
      for (Term& n : swapMoves(c, cur, k)) visit(std::move(n));
      if (auto n = cancelAt(c, cur, k)) visit(std::move(*n));
      if (auto n = dropIdAt(c, cur, k)) visit(std::move(*n));
    }
    if (done) break;
  }
  return seen;
}

// Canonical representative for stacks containing identity-boundary
// cells, where exchange orientations are ambiguous: the least member of
// the basic-move closure, ranking by stack height then serialization.
void closureMin(const Computad& c, Term& t) {
  Term best = t;
  auto bestRank = stackRank(t);
  for (const auto& kv : moveClosure(c, t)) {
    auto rank = stackRank(kv.second);
    if (rank < bestRank) {
      bestRank = rank;
      best = kv.second;
    }
  }
  t = best;
}

}  // namespace

bool normalizeInPlace(const Computad& c, Term& t) {
  Term before = t;
  freelyReduce(c, t.layers);
  if (anyEmptyFootprint(c, t.layers)) {
    closureMin(c, t);
  } else {
    while (true) {
      greedySort(c, t.layers);
      if (!freelyReduce(c, t.layers)) break;
    }
  }
  return !(t == before);
}

Term normalized(const Computad& c, const Term& t) {
  Term out = t;
  normalizeInPlace(c, out);
  return out;
}

bool equalInFree(const Computad& c, const Term& a, const Term& b) {
  if (a.src != b.src || a.dst != b.dst) return false;
  Term ra = a;
  Term rb = b;
  freelyReduce(c, ra.layers);
  freelyReduce(c, rb.layers);
  if (anyEmptyFootprint(c, ra.layers) || anyEmptyFootprint(c, rb.layers)) {
    // Identity-boundary cells admit two orientations for some exchanges,
    // so distinct closure minima can still name one cell. Reachability
    // between the closures is the reliable test.
    auto ca = moveClosure(c, ra);
    bool met = false;
    moveClosure(c, rb, &ca, &met);
    return met;
  }
  return normalized(c, ra).layers == normalized(c, rb).layers;
}

std::vector<Term> swapMoves(const Computad& c, const Term& t, size_t k) {
  std::vector<Term> out;
  if (t.layers.size() < 2 || k + 1 >= t.layers.size()) return out;
  const Layer& u = t.layers[k];
  const Layer& w = t.layers[k + 1];
  auto push = [&](const SwapResult& s) {
    Term n = t;
    n.layers[k] = s.first;
    n.layers[k + 1] = s.second;
    if (std::find(out.begin(), out.end(), n) == out.end())
      out.push_back(std::move(n));
  };
  if (auto s = swapLeftCase(c, u, w)) push(*s);
  if (auto s = swapRightCase(c, u, w)) push(*s);
  return out;
}

std::optional<Term> cancelAt(const Computad& c, const Term& t, size_t k) {
  if (t.layers.size() < 2 || k + 1 >= t.layers.size()) return std::nullopt;
  if (!layersCancel(c, t.layers[k], t.layers[k + 1])) return std::nullopt;
  Term n = t;
  n.layers.erase(n.layers.begin() + k, n.layers.begin() + k + 2);
  return n;
}

std::optional<Term> dropIdAt(const Computad& c, const Term& t, size_t k) {
  (void)c;
  if (k >= t.layers.size() || t.layers[k].gen >= 0) return std::nullopt;
  Term n = t;
  n.layers.erase(n.layers.begin() + k);
  return n;
}

std::string termKey(const Term& t) {
  std::ostringstream os;
  auto path = [&](const Path& p) {
    os << p.src << '>' << p.dst << ':';
    for (size_t i = 0; i < p.gens.size(); ++i) {
      if (i) os << '.';
      os << p.gens[i];
    }
  };
  path(t.src);
  os << '|';
  path(t.dst);
  for (const Layer& l : t.layers) {
    os << '|';
    path(l.left);
    os << (l.inverse ? '~' : '^') << l.gen << ',';
    path(l.right);
  }
  return os.str();
}

std::string renderElevator(const Computad& c, const Term& t) {
  auto wordTokens = [&](const Path& p) {
    std::vector<std::string> toks;
    for (Gen1Id g : p.gens) toks.push_back(c.gen1[g].name);
    if (toks.empty()) toks.push_back("id_" + c.objects[p.src]);
    return toks;
  };
  auto renderWord = [&](const std::vector<std::string>& toks, std::string& line,
                        std::vector<size_t>& starts) {
    line.clear();
    starts.clear();
    for (const std::string& s : toks) {
      if (!line.empty()) line += ' ';
      starts.push_back(line.size());
      line += s;
    }
  };
  std::ostringstream os;
  Path cur = t.src;
  std::vector<std::string> toks = wordTokens(cur);
  std::string line;
  std::vector<size_t> starts;
  renderWord(toks, line, starts);
  os << line << '\n';
  for (const Layer& l : t.layers) {
    std::string label;
    if (l.gen < 0)
      label = "[=]";
    else
      label = std::string("[") + (l.inverse ? "~" : "") + c.gen2[l.gen].name +
              "]";
    size_t nl = l.left.gens.size();
    size_t nf = cur.gens.size() - nl - l.right.gens.size();
    std::string row;
    auto barAt = [&](size_t tokIdx) {
      size_t col = starts[tokIdx] + toks[tokIdx].size() / 2;
      if (row.size() < col) row.resize(col, ' ');
      row += '|';
    };
    if (cur.gens.empty()) {
      row = label;
    } else {
      for (size_t i = 0; i < nl; ++i) barAt(i);
      size_t col = nl < cur.gens.size() ? starts[nl] : line.size() + 1;
      if (nf > 0) col = starts[nl];
      if (row.size() < col) row.resize(col, ' ');
      if (!row.empty() && row.back() != ' ') row += ' ';
      row += label;
      for (size_t i = nl + nf; i < cur.gens.size(); ++i) barAt(i);
    }
    os << row << '\n';
    cur = layerDst(c, l);
    toks = wordTokens(cur);
    renderWord(toks, line, starts);
    os << line << '\n';
  }
  return os.str();
}

}  // namespace hocat
