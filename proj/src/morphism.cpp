#include "kgr/morphism.hpp"

namespace kgr {

ValidationReport validateMorphism(const KGraph& dom, const KGraph& cod,
                                  const GraphMorphism& m) {
  ValidationReport rep;
  auto bad = [&](const std::string& kind, const std::string& detail) {
    rep.violations.push_back(Violation{kind, detail});
  };
  if (dom.rank() != cod.rank()) bad("RankMismatch", "ranks differ");
  if (static_cast<int>(m.vmap.size()) != dom.numVertices() ||
      static_cast<int>(m.emap.size()) != dom.numEdges()) {
    bad("EndpointMismatch", "map tables have wrong size");
    rep.ok = false;
    return rep;
  }
  for (int v : m.vmap)
    if (v < 0 || v >= cod.numVertices()) bad("EndpointMismatch", "bad vertex image");
  for (int e : m.emap)
    if (e < 0 || e >= cod.numEdges()) bad("EndpointMismatch", "bad edge image");
  if (!rep.violations.empty()) {
    rep.ok = false;
    return rep;
  }
  for (int e = 0; e < dom.numEdges(); ++e) {
    const Edge& de = dom.edge(e);
    const Edge& ce = cod.edge(m.emap[e]);
    if (de.color != ce.color)
      bad("ColorMismatch", "edge " + de.name + " changes color");
    if (m.vmap[de.range] != ce.range || m.vmap[de.source] != ce.source)
      bad("EndpointMismatch", "edge " + de.name + " does not commute with r/s");
  }
  for (const Square& q : dom.squares()) {
    auto sw = cod.swapPair(m.emap[q.e], m.emap[q.f]);
    if (!sw || sw->first != m.emap[q.g] || sw->second != m.emap[q.h])
      bad("SquareNotPreserved",
          "square " + dom.edge(q.e).name + " " + dom.edge(q.f).name +
              " is not sent to a square");
  }
  rep.ok = rep.violations.empty();
  return rep;
}

GraphMorphism identityMorphism(const KGraph& g) {
  GraphMorphism m;
  m.vmap.resize(g.numVertices());
  m.emap.resize(g.numEdges());
  for (int v = 0; v < g.numVertices(); ++v) m.vmap[v] = v;
  for (int e = 0; e < g.numEdges(); ++e) m.emap[e] = e;
  return m;
}

GraphMorphism composeMorphisms(const GraphMorphism& first,
                               const GraphMorphism& second) {
  GraphMorphism m;
  m.vmap.reserve(first.vmap.size());
  m.emap.reserve(first.emap.size());
  for (int v : first.vmap) m.vmap.push_back(second.vmap[v]);
  for (int e : first.emap) m.emap.push_back(second.emap[e]);
  return m;
}

Path applyMorphism(const KGraph& dom, const KGraph& cod,
                   const GraphMorphism& m, const Path& p) {
  if (p.edges.empty()) return vertexPath(cod, m.vmap[p.range]);
  std::vector<int> es;
  es.reserve(p.edges.size());
  for (int e : p.edges) es.push_back(m.emap[e]);
  (void)dom;
  return makePath(cod, m.vmap[p.range], es);
}

}  // namespace kgr
