#pragma once

#include <string>
#include <vector>

namespace hocat {

using ObjId = int;
using Gen1Id = int;
using Gen2Id = int;

// A composable string of 1-cell generators, written in display order:
// gens.front() is the arrow applied last, gens.back() the one applied
// first, matching the way g*f reads on the page. An empty path is the
// identity on src == dst.
struct Path {
  ObjId src = -1;
  ObjId dst = -1;
  std::vector<Gen1Id> gens;

  bool operator==(const Path&) const = default;
  bool empty() const { return gens.empty(); }
  size_t size() const { return gens.size(); }
};

struct Gen1 {
  std::string name;
  ObjId src = -1;
  ObjId dst = -1;
};

struct Gen2 {
  std::string name;
  Path src;
  Path dst;
  bool invertible = false;
};

// Generating data for a free (or presented) bicategory: objects, arrow
// generators, 2-cell generators between parallel paths.
struct Computad {
  std::vector<std::string> objects;
  std::vector<Gen1> gen1;
  std::vector<Gen2> gen2;

  ObjId objectId(const std::string& name) const;
  Gen1Id gen1Id(const std::string& name) const;
  Gen2Id gen2Id(const std::string& name) const;

  Path idPath(ObjId o) const { return Path{o, o, {}}; }

  // Builds a path from generator ids listed in display order; returns an
  // invalid path (src == -1) when the ids do not chain.
  Path makePath(const std::vector<Gen1Id>& gens) const;

  bool validPath(const Path& p, std::string* why = nullptr) const;

  // later * first; invalid path when first.dst != later.src.
  Path composePaths(const Path& later, const Path& first) const;

  bool validate(std::string* why = nullptr) const;
};

std::string pathToString(const Computad& c, const Path& p);

// Object sitting at interface k of p in display order: k = 0 is the
// target end, k = p.size() the source end.
ObjId objectAt(const Computad& c, const Path& p, size_t k);

// The display-order slice p.gens[begin..end) with matching endpoints.
Path subPath(const Computad& c, const Path& p, size_t begin, size_t end);

}  // namespace hocat
