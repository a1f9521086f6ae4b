#include "hocat/computad.hpp"

#include <sstream>

namespace hocat {

ObjId Computad::objectId(const std::string& name) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return static_cast<ObjId>(i);
  return -1;
}

Gen1Id Computad::gen1Id(const std::string& name) const {
  for (size_t i = 0; i < gen1.size(); ++i)
    if (gen1[i].name == name) return static_cast<Gen1Id>(i);
  return -1;
}

Gen2Id Computad::gen2Id(const std::string& name) const {
  for (size_t i = 0; i < gen2.size(); ++i)
    if (gen2[i].name == name) return static_cast<Gen2Id>(i);
  return -1;
}

Path Computad::makePath(const std::vector<Gen1Id>& gens) const {
  Path p;
  if (gens.empty()) return p;  // caller must fix src/dst for identities
  p.gens = gens;
  p.src = gen1[gens.back()].src;
  p.dst = gen1[gens.front()].dst;
  std::string why;
  if (!validPath(p, &why)) return Path{};
  return p;
}

bool Computad::validPath(const Path& p, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (p.src < 0 || p.src >= static_cast<ObjId>(objects.size()) ||
      p.dst < 0 || p.dst >= static_cast<ObjId>(objects.size()))
    return fail("path endpoint out of range");
  if (p.gens.empty()) {
    if (p.src != p.dst) return fail("identity path with src != dst");
    return true;
  }
  for (Gen1Id g : p.gens)
    if (g < 0 || g >= static_cast<Gen1Id>(gen1.size()))
      return fail("generator id out of range");
  if (gen1[p.gens.back()].src != p.src) return fail("path src mismatch");
  if (gen1[p.gens.front()].dst != p.dst) return fail("path dst mismatch");
  for (size_t i = 0; i + 1 < p.gens.size(); ++i)
    if (gen1[p.gens[i]].src != gen1[p.gens[i + 1]].dst)
      return fail("path does not chain at position " + std::to_string(i));
  return true;
}

Path Computad::composePaths(const Path& later, const Path& first) const {
  if (first.dst != later.src) return Path{};
  Path p;
  p.src = first.src;
  p.dst = later.dst;
  p.gens = later.gens;
  p.gens.insert(p.gens.end(), first.gens.begin(), first.gens.end());
  return p;
}

bool Computad::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (const auto& g : gen1)
    if (g.src < 0 || g.src >= static_cast<ObjId>(objects.size()) ||
        g.dst < 0 || g.dst >= static_cast<ObjId>(objects.size()))
      return fail("arrow generator " + g.name + " has bad endpoints");
  for (const auto& g : gen2) {
    std::string sub;
    if (!validPath(g.src, &sub))
      return fail("2-cell " + g.name + " source: " + sub);
    if (!validPath(g.dst, &sub))
      return fail("2-cell " + g.name + " target: " + sub);
    if (g.src.src != g.dst.src || g.src.dst != g.dst.dst)
      return fail("2-cell " + g.name + " boundary paths are not parallel");
  }
  return true;
}

ObjId objectAt(const Computad& c, const Path& p, size_t k) {
  if (k >= p.gens.size()) return p.src;
  return c.gen1[p.gens[k]].dst;
}

Path subPath(const Computad& c, const Path& p, size_t begin, size_t end) {
  Path out;
  out.src = objectAt(c, p, end);
  out.dst = objectAt(c, p, begin);
  out.gens.assign(p.gens.begin() + begin, p.gens.begin() + end);
  return out;
}

std::string pathToString(const Computad& c, const Path& p) {
  if (p.gens.empty()) {
    return "id_" + (p.src >= 0 && p.src < static_cast<ObjId>(c.objects.size())
                        ? c.objects[p.src]
                        : std::string("?"));
  }
  std::ostringstream os;
  for (size_t i = 0; i < p.gens.size(); ++i) {
    if (i) os << "*";
    os << c.gen1[p.gens[i]].name;
  }
  return os.str();
}

}  // namespace hocat
