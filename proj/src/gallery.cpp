#include "kgr/gallery.hpp"

#include "kgr/cell_complex.hpp"

namespace kgr {

namespace {

struct EdgeSpec {
  const char* name;
  int color;
  const char* range;
  const char* source;
};
struct SquareSpec {
  const char* e;
  const char* f;
  const char* g;
  const char* h;
};

KGraph build(int rank, std::initializer_list<const char*> vertices,
             std::initializer_list<EdgeSpec> edges,
             std::initializer_list<SquareSpec> squares) {
  KGraph g(rank);
  for (const char* v : vertices) g.addVertex(v);
  for (const EdgeSpec& e : edges) g.addEdge(e.name, e.color, e.range, e.source);
  for (const SquareSpec& q : squares) g.addSquare(q.e, q.f, q.g, q.h);
  ValidationReport rep = g.validate();
  if (!rep.ok) throw KgError("gallery fixture invalid: " + rep.summary());
  return g;
}

KGraph sphere6() {
  return build(2, {"u", "v", "w", "x", "y", "z"},
               {{"a", 1, "w", "u"},
                {"b", 1, "w", "v"},
                {"c", 1, "y", "x"},
                {"d", 1, "z", "x"},
                {"e", 2, "x", "u"},
                {"f", 2, "x", "v"},
                {"g", 2, "y", "w"},
                {"h", 2, "z", "w"}},
               {{"d", "f", "h", "b"},
                {"c", "f", "g", "b"},
                {"d", "e", "h", "a"},
                {"c", "e", "g", "a"}});
}

KGraph torus4() {
  return build(2, {"u", "v", "w", "x"},
               {{"a", 1, "w", "x"},
                {"b", 1, "w", "x"},
                {"c", 1, "u", "v"},
                {"d", 1, "u", "v"},
                {"e", 2, "v", "x"},
                {"f", 2, "v", "x"},
                {"g", 2, "u", "w"},
                {"h", 2, "u", "w"}},
               {{"c", "e", "g", "b"},
                {"d", "e", "g", "a"},
                {"c", "f", "h", "b"},
                {"d", "f", "h", "a"}});
}

KGraph rp2() {
  return build(2, {"u", "v", "w", "x", "y"},
               {{"a", 1, "w", "y"},
                {"b", 1, "w", "x"},
                {"c", 1, "u", "v"},
                {"d", 1, "u", "v"},
                {"e", 2, "v", "y"},
                {"f", 2, "v", "x"},
                {"g", 2, "u", "w"},
                {"h", 2, "u", "w"}},
               {{"c", "e", "g", "a"},
                {"d", "f", "g", "b"},
                {"c", "f", "h", "b"},
                {"d", "e", "h", "a"}});
}

KGraph klein() {
  return build(2, {"u", "v", "w", "x"},
               {{"a", 1, "w", "x"},
                {"b", 1, "w", "x"},
                {"c", 1, "u", "v"},
                {"d", 1, "u", "v"},
                {"e", 2, "v", "x"},
                {"f", 2, "v", "x"},
                {"g", 2, "u", "w"},
                {"h", 2, "u", "w"}},
               {{"c", "e", "g", "b"},
                {"d", "f", "g", "a"},
                {"c", "f", "h", "b"},
                {"d", "e", "h", "a"}});
}

KGraph loop1() {
  KGraph g(1);
  g.addVertex("v");
  g.addEdge("e", 1, "v", "v");
  g.validate();
  return g;
}

}  // namespace

std::vector<int> sphere10Labels(const KGraph& base) {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  int ne = base.numEdges();
  for (int mask = 0; mask < (1 << ne); ++mask) {
    GroupLabeling l;
    l.base = &base;
    l.group = z2;
    l.label.resize(ne);
    for (int e = 0; e < ne; ++e) l.label[e] = (mask >> e) & 1;
    if (!validateLabeling(l).ok) continue;
    Covering cov = skewProduct(l);
    if (componentCount(cov.total) != 1) continue;
    CellComplex c = buildComplex(cov.total);
    if (c.cells[0].size() != 10 || c.cells[1].size() != 16 ||
        c.cells[2].size() != 8)
      continue;
    if (eulerCharacteristic(c) != 2) continue;
    return l.label;
  }
  throw KgError("no suitable Z/2 labeling of rp2 exists");
}

Covering sphere10Covering() {
  static const KGraph base = rp2();
  GroupLabeling l;
  l.base = &base;
  l.group = FiniteGroup::cyclic(2);
  l.label = sphere10Labels(base);
  Covering cov = skewProduct(l);
  return cov;
}

std::vector<std::string> galleryNames() {
  return {"sphere6", "torus4", "rp2", "klein", "sphere10", "loop1"};
}

KGraph gallery(const std::string& name) {
  if (name == "sphere6") return sphere6();
  if (name == "torus4") return torus4();
  if (name == "rp2") return rp2();
  if (name == "klein") return klein();
  if (name == "sphere10") return sphere10Covering().total;
  if (name == "loop1") return loop1();
  throw KgError("unknown gallery name: " + name);
}

}  // namespace kgr
