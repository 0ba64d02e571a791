#include "kgr/covering.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace kgr {

FiniteGroup FiniteGroup::fromTable(const std::vector<std::vector<int>>& table) {
  FiniteGroup g;
  g.order = static_cast<int>(table.size());
  if (g.order == 0) throw KgError("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != g.order)
      throw KgError("group table is not square");
    for (int x : row)
      if (x < 0 || x >= g.order) throw KgError("group table entry out of range");
  }
  g.mul = table;
  // identity
  g.id = -1;
  for (int e = 0; e < g.order; ++e) {
    bool ok = true;
    for (int a = 0; a < g.order && ok; ++a)
      ok = g.mul[e][a] == a && g.mul[a][e] == a;
    if (ok) {
      g.id = e;
      break;
    }
  }
  if (g.id < 0) throw KgError("group table has no identity");
  // inverses
  g.inv.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b)
      if (g.mul[a][b] == g.id && g.mul[b][a] == g.id) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0) throw KgError("group table element has no inverse");
  }
  // associativity
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          throw KgError("group table is not associative");
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return fromTable(t);
}

int FiniteGroup::pow(int a, int e) const {
  int r = id;
  int x = e >= 0 ? a : inv[a];
  for (int i = 0; i < std::abs(e); ++i) r = mul[r][x];
  return r;
}

std::vector<int> subgroupClosure(const FiniteGroup& g,
                                 const std::vector<int>& elements) {
  for (int x : elements)
    if (x < 0 || x >= g.order) throw KgError("NotASubgroup: bad element");
  std::set<int> s(elements.begin(), elements.end());
  s.insert(g.id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(g.mul[a][g.inv[b]]).second) grew = true;
  }
  return {s.begin(), s.end()};
}

ValidationReport validateLabeling(const GroupLabeling& l) {
  ValidationReport rep;
  const KGraph& g = *l.base;
  if (static_cast<int>(l.label.size()) != g.numEdges()) {
    rep.violations.push_back({"LabelingInvalid", "wrong label count"});
    rep.ok = false;
    return rep;
  }
  for (int x : l.label)
    if (x < 0 || x >= l.group.order)
      rep.violations.push_back({"LabelingInvalid", "label out of range"});
  for (const Square& q : g.squares()) {
    int lhs = l.group.mul[l.label[q.e]][l.label[q.f]];
    int rhs = l.group.mul[l.label[q.g]][l.label[q.h]];
    if (lhs != rhs)
      rep.violations.push_back(
          {"LabelingInvalid", "square " + g.edge(q.e).name + " " +
                                  g.edge(q.f).name + " breaks functoriality"});
  }
  rep.ok = rep.violations.empty();
  return rep;
}

namespace {

Covering skewWithClasses(const GroupLabeling& l,
                         const std::vector<int>& classOf, int numClasses,
                         const std::string& tag) {
  ValidationReport lv = validateLabeling(l);
  if (!lv.ok) throw KgError("LabelingInvalid: " + lv.summary());
  const KGraph& b = *l.base;
  Covering cov;
  cov.total = KGraph(b.rank());
  KGraph& t = cov.total;
  auto vid = [&](int v, int c) { return v * numClasses + c; };
  for (int v = 0; v < b.numVertices(); ++v)
    for (int c = 0; c < numClasses; ++c)
      t.addVertex(b.vertexName(v) + "." + tag + std::to_string(c));
  auto eid = [&](int e, int c) { return e * numClasses + c; };
  for (int e = 0; e < b.numEdges(); ++e) {
    const Edge& ed = b.edge(e);
    for (int c = 0; c < numClasses; ++c) {
      // class of c * label(e): classOf is indexed by (class, label)
      int sc = classOf[c * l.group.order + l.label[e]];
      t.addEdge(ed.name + "." + tag + std::to_string(c), ed.color,
                vid(ed.range, c), vid(ed.source, sc));
    }
  }
  for (const Square& q : b.squares()) {
    for (int c = 0; c < numClasses; ++c) {
      int cE = classOf[c * l.group.order + l.label[q.e]];
      int cG = classOf[c * l.group.order + l.label[q.g]];
      t.addSquare(eid(q.e, c), eid(q.f, cE), eid(q.g, c), eid(q.h, cG));
    }
  }
  ValidationReport tv = t.validate();
  if (!tv.ok) throw KgError("skew product failed validation: " + tv.summary());
  cov.map.vmap.resize(t.numVertices());
  cov.map.emap.resize(t.numEdges());
  for (int v = 0; v < b.numVertices(); ++v)
    for (int c = 0; c < numClasses; ++c) cov.map.vmap[vid(v, c)] = v;
  for (int e = 0; e < b.numEdges(); ++e)
    for (int c = 0; c < numClasses; ++c) cov.map.emap[eid(e, c)] = e;
  return cov;
}

}  // namespace

Covering skewProduct(const GroupLabeling& l) {
  // classes are the group elements themselves; class action x -> x*g
  int n = l.group.order;
  std::vector<int> classOf(n * n);
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < n; ++g) classOf[x * n + g] = l.group.mul[x][g];
  return skewWithClasses(l, classOf, n, "g");
}

Covering relativeSkewProduct(const GroupLabeling& l,
                             const std::vector<int>& subgroup) {
  const FiniteGroup& G = l.group;
  std::vector<int> H = subgroupClosure(G, subgroup);
  std::set<int> given(subgroup.begin(), subgroup.end());
  given.insert(G.id);
  if (std::set<int>(H.begin(), H.end()) != given)
    throw KgError("NotASubgroup: set is not closed");
  // right cosets Hx
  std::vector<int> cosetIndex(G.order, -1);
  int numCosets = 0;
  for (int x = 0; x < G.order; ++x) {
    if (cosetIndex[x] >= 0) continue;
    for (int h : H) cosetIndex[G.mul[h][x]] = numCosets;
    ++numCosets;
  }
  // class action: coset(Hx) * g = H(x*g)
  std::vector<int> rep(numCosets, -1);
  for (int x = G.order - 1; x >= 0; --x) rep[cosetIndex[x]] = x;
  std::vector<int> classOf(numCosets * G.order);
  for (int c = 0; c < numCosets; ++c)
    for (int g = 0; g < G.order; ++g)
      classOf[c * G.order + g] = cosetIndex[G.mul[rep[c]][g]];
  return skewWithClasses(l, classOf, numCosets, "c");
}

int componentCount(const KGraph& g) {
  std::vector<int> parent(g.numVertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < g.numEdges(); ++e)
    parent[find(g.edge(e).range)] = find(g.edge(e).source);
  std::set<int> roots;
  for (int v = 0; v < g.numVertices(); ++v) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

ValidationReport verifyCovering(const KGraph& total, const KGraph& base,
                                const GraphMorphism& p) {
  ValidationReport rep = validateMorphism(total, base, p);
  if (!rep.ok) return rep;
  auto bad = [&](const std::string& kind, const std::string& detail) {
    rep.violations.push_back({kind, detail});
  };

  std::vector<bool> vhit(base.numVertices(), false);
  for (int v : p.vmap) vhit[v] = true;
  for (int v = 0; v < base.numVertices(); ++v)
    if (!vhit[v]) bad("NotSurjective", "vertex " + base.vertexName(v));

  // per-vertex per-color edge bijections, both directions
  for (int w = 0; w < total.numVertices(); ++w) {
    int v = p.vmap[w];
    for (int color = 1; color <= total.rank(); ++color) {
      for (bool outDir : {true, false}) {
        const auto& up = outDir ? total.edgesOutOf(w, color)
                                : total.edgesInto(w, color);
        const auto& down = outDir ? base.edgesOutOf(v, color)
                                  : base.edgesInto(v, color);
        std::multiset<int> images;
        for (int e : up) images.insert(p.emap[e]);
        std::multiset<int> want(down.begin(), down.end());
        if (images != want)
          bad("NotBijectiveOnStar",
              std::string(outDir ? "out" : "in") + "-edges at " +
                  total.vertexName(w) + " do not biject");
      }
    }
  }
  if (!rep.violations.empty()) {
    rep.ok = false;
    return rep;
  }

  // exact path bijections at |n| <= 2
  std::vector<Degree> degs;
  int k = total.rank();
  for (int i = 1; i <= k; ++i) {
    degs.push_back(degUnit(k, i));
    for (int j = i; j <= k; ++j)
      degs.push_back(degAdd(degUnit(k, i), degUnit(k, j)));
  }
  for (int w = 0; w < total.numVertices(); ++w) {
    int v = p.vmap[w];
    for (const Degree& n : degs) {
      for (bool outDir : {true, false}) {
        auto up = outDir ? enumeratePaths(total, n, w)
                         : enumeratePaths(total, n, std::nullopt, w);
        auto down = outDir ? enumeratePaths(base, n, v)
                           : enumeratePaths(base, n, std::nullopt, v);
        std::multiset<std::string> images;
        for (const Path& q : up)
          images.insert(pathId(base, applyMorphism(total, base, p, q)));
        std::multiset<std::string> want;
        for (const Path& q : down) want.insert(pathId(base, q));
        if (images != want) {
          bad("NotBijectiveOnPaths",
              "degree " + degToString(n) + " paths at " + total.vertexName(w) +
                  " do not biject");
        }
      }
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

std::vector<int> fiber(const KGraph& total, const KGraph& base,
                       const GraphMorphism& p, int baseVertex) {
  if (baseVertex < 0 || baseVertex >= base.numVertices())
    throw KgError("UnknownVertex");
  std::vector<int> f;
  for (int w = 0; w < total.numVertices(); ++w)
    if (p.vmap[w] == baseVertex) f.push_back(w);
  return f;
}

namespace {

// Unique-path-lifting propagation: extend seed vertex assignment to a full
// deck transformation or fail.
std::optional<GraphMorphism> propagateDeck(const KGraph& total,
                                           const GraphMorphism& p, int v0,
                                           int image0) {
  GraphMorphism g;
  g.vmap.assign(total.numVertices(), -1);
  g.emap.assign(total.numEdges(), -1);
  g.vmap[v0] = image0;
  std::deque<int> queue{v0};
  auto uniqueMatch = [&](const std::vector<int>& candidates, int baseEdge) {
    int found = -1;
    for (int e : candidates)
      if (p.emap[e] == baseEdge) {
        if (found >= 0) return -2;
        found = e;
      }
    return found;
  };
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    int w = g.vmap[v];
    for (int color = 1; color <= total.rank(); ++color) {
      for (bool outDir : {true, false}) {
        const auto& edges =
            outDir ? total.edgesOutOf(v, color) : total.edgesInto(v, color);
        const auto& imageEdges =
            outDir ? total.edgesOutOf(w, color) : total.edgesInto(w, color);
        for (int e : edges) {
          int img = uniqueMatch(imageEdges, p.emap[e]);
          if (img < 0) return std::nullopt;
          if (g.emap[e] >= 0 && g.emap[e] != img) return std::nullopt;
          g.emap[e] = img;
          int other = outDir ? total.edge(e).source : total.edge(e).range;
          int otherImg =
              outDir ? total.edge(img).source : total.edge(img).range;
          if (g.vmap[other] < 0) {
            g.vmap[other] = otherImg;
            queue.push_back(other);
          } else if (g.vmap[other] != otherImg) {
            return std::nullopt;
          }
        }
      }
    }
  }
  for (int v : g.vmap)
    if (v < 0) return std::nullopt;  // total space not connected
  for (int e : g.emap)
    if (e < 0) return std::nullopt;
  // must be a bijection and a k-graph automorphism
  std::set<int> vs(g.vmap.begin(), g.vmap.end());
  std::set<int> es(g.emap.begin(), g.emap.end());
  if (static_cast<int>(vs.size()) != total.numVertices() ||
      static_cast<int>(es.size()) != total.numEdges())
    return std::nullopt;
  if (!validateMorphism(total, total, g).ok) return std::nullopt;
  return g;
}

}  // namespace

std::vector<GraphMorphism> deckGroup(const KGraph& total, const KGraph& base,
                                     const GraphMorphism& p) {
  std::vector<GraphMorphism> out;
  if (total.numVertices() == 0) return out;
  for (int w : fiber(total, base, p, p.vmap[0])) {
    auto g = propagateDeck(total, p, 0, w);
    if (g) out.push_back(*g);
  }
  return out;
}

bool isRegular(const KGraph& total, const KGraph& base,
               const GraphMorphism& p) {
  if (total.numVertices() == 0) return true;
  std::vector<GraphMorphism> deck = deckGroup(total, base, p);
  std::set<int> orbit;
  for (const GraphMorphism& g : deck) orbit.insert(g.vmap[0]);
  return orbit.size() == fiber(total, base, p, p.vmap[0]).size();
}

namespace {

bool matchEdges(const KGraph& a, const KGraph& b, const std::vector<int>& vmap,
                std::vector<int>& emap, int nextEdge) {
  if (nextEdge == a.numEdges()) {
    GraphMorphism m{vmap, emap};
    return validateMorphism(a, b, m).ok;
  }
  const Edge& ea = a.edge(nextEdge);
  for (int eb = 0; eb < b.numEdges(); ++eb) {
    const Edge& bb = b.edge(eb);
    if (bb.color != ea.color || bb.range != vmap[ea.range] ||
        bb.source != vmap[ea.source])
      continue;
    if (std::find(emap.begin(), emap.begin() + nextEdge, eb) !=
        emap.begin() + nextEdge)
      continue;
    emap[nextEdge] = eb;
    if (matchEdges(a, b, vmap, emap, nextEdge + 1)) return true;
  }
  emap[nextEdge] = -1;
  return false;
}

bool matchVertices(const KGraph& a, const KGraph& b, std::vector<int>& vmap,
                   std::vector<bool>& used, int nextVertex) {
  if (nextVertex == a.numVertices()) {
    std::vector<int> emap(a.numEdges(), -1);
    return matchEdges(a, b, vmap, emap, 0);
  }
  for (int w = 0; w < b.numVertices(); ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int color = 1; color <= a.rank() && ok; ++color)
      ok = a.edgesOutOf(nextVertex, color).size() ==
               b.edgesOutOf(w, color).size() &&
           a.edgesInto(nextVertex, color).size() ==
               b.edgesInto(w, color).size();
    if (!ok) continue;
    vmap[nextVertex] = w;
    used[w] = true;
    if (matchVertices(a, b, vmap, used, nextVertex + 1)) return true;
    used[w] = false;
  }
  vmap[nextVertex] = -1;
  return false;
}

}  // namespace

std::optional<GraphMorphism> findIsomorphism(const KGraph& a,
                                             const KGraph& b) {
  if (a.rank() != b.rank() || a.numVertices() != b.numVertices() ||
      a.numEdges() != b.numEdges() || a.numSquares() != b.numSquares())
    return std::nullopt;
  std::vector<int> vmap(a.numVertices(), -1);
  std::vector<bool> used(b.numVertices(), false);
  if (!matchVertices(a, b, vmap, used, 0)) return std::nullopt;
  std::vector<int> emap(a.numEdges(), -1);
  matchEdges(a, b, vmap, emap, 0);
  return GraphMorphism{vmap, emap};
}

std::optional<Path> liftPath(const KGraph& total, const KGraph& base,
                             const GraphMorphism& p, const Path& path,
                             int at) {
  if (p.vmap[at] != path.range) return std::nullopt;
  std::vector<int> lifted;
  int v = at;
  for (int e : path.edges) {
    int found = -1;
    for (int cand : total.edgesOutOf(v, base.edge(e).color))
      if (p.emap[cand] == e) {
        if (found >= 0) return std::nullopt;
        found = cand;
      }
    if (found < 0) return std::nullopt;
    lifted.push_back(found);
    v = total.edge(found).source;
  }
  return makePath(total, at, lifted);
}

}  // namespace kgr
