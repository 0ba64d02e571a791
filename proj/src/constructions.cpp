#include "kgr/constructions.hpp"

#include <algorithm>
#include <set>

namespace kgr {

ValidationReport validateQuasimorphism(const Quasimorphism& q) {
  ValidationReport rep;
  auto bad = [&](const std::string& kind, const std::string& detail) {
    rep.violations.push_back({kind, detail});
  };
  const KGraph& d = *q.dom;
  const KGraph& c = *q.cod;
  if (static_cast<int>(q.piGen.size()) != d.rank() ||
      static_cast<int>(q.vmap.size()) != d.numVertices() ||
      static_cast<int>(q.emap.size()) != d.numEdges()) {
    bad("EndpointMismatch", "map tables have wrong size");
    rep.ok = false;
    return rep;
  }
  for (int e = 0; e < d.numEdges(); ++e) {
    const Edge& de = d.edge(e);
    const Path& img = q.emap[e];
    if (img.degree != q.piGen[de.color - 1])
      bad("DegreeMismatch", "edge " + de.name);
    if (img.range != q.vmap[de.range] || img.source != q.vmap[de.source])
      bad("EndpointMismatch", "edge " + de.name);
  }
  if (!rep.violations.empty()) {
    rep.ok = false;
    return rep;
  }
  for (const Square& sq : d.squares()) {
    Path lhs = compose(c, q.emap[sq.e], q.emap[sq.f]);
    Path rhs = compose(c, q.emap[sq.g], q.emap[sq.h]);
    if (!(lhs == rhs))
      bad("SquareNotPreserved",
          "square " + d.edge(sq.e).name + " " + d.edge(sq.f).name + " = " +
              d.edge(sq.g).name + " " + d.edge(sq.h).name);
  }
  rep.ok = rep.violations.empty();
  return rep;
}

Path applyQuasimorphism(const Quasimorphism& q, const Path& p) {
  const KGraph& c = *q.cod;
  if (p.edges.empty()) return vertexPath(c, q.vmap[p.range]);
  std::vector<int> es;
  for (int e : p.edges) {
    const Path& img = q.emap[e];
    es.insert(es.end(), img.edges.begin(), img.edges.end());
  }
  return makePath(c, q.vmap[p.range], es);
}

std::pair<Path, RealPoint> inducedPointMap(const Quasimorphism& q,
                                           const Path& p, const RealPoint& t) {
  int l = q.cod->rank();
  RealPoint pt(l, Rat(0));
  for (size_t i = 0; i < t.size(); ++i)
    for (int j = 0; j < l; ++j) pt[j] += t[i] * Rat(q.piGen[i][j]);
  return canonicalPoint(*q.cod, applyQuasimorphism(q, p), pt);
}

namespace {

std::vector<Degree> degreesUpTo(int rank, int bound) {
  std::vector<Degree> out{degZero(rank)};
  for (size_t at = 0; at < out.size(); ++at) {
    Degree d = out[at];
    if (degTotal(d) >= bound) continue;
    for (int i = 0; i < rank; ++i) {
      // increase coordinate i only if later coordinates are 0, to avoid dups
      bool canon = true;
      for (int j = i + 1; j < rank; ++j)
        if (d[j] != 0) canon = false;
      if (!canon) continue;
      Degree e = d;
      e[i] += 1;
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace

WeakSurjectivity checkWeakSurjectivity(const Quasimorphism& q,
                                       int degreeBound) {
  const KGraph& d = *q.dom;
  const KGraph& c = *q.cod;
  // all codomain paths up to the bound, by id
  std::set<std::string> missing;
  std::vector<Path> targets;
  for (const Degree& n : degreesUpTo(c.rank(), degreeBound))
    for (const Path& g : enumeratePaths(c, n, std::nullopt, std::nullopt,
                                        degreeBound))
      if (missing.insert(pathId(c, g)).second) targets.push_back(g);

  for (const Degree& m : degreesUpTo(d.rank(), degreeBound)) {
    for (const Path& lam : enumeratePaths(d, m, std::nullopt, std::nullopt,
                                          degreeBound)) {
      Path img = applyQuasimorphism(q, lam);
      // every segment of img is realized
      std::vector<Degree> subs = degreesUpTo(c.rank(), degTotal(img.degree));
      for (const Degree& p : subs) {
        if (!degLe(p, img.degree)) continue;
        for (const Degree& len : subs) {
          Degree qq = degAdd(p, len);
          if (!degLe(qq, img.degree)) continue;
          missing.erase(pathId(c, segment(c, img, p, qq)));
        }
      }
      if (missing.empty()) return {true, ""};
    }
  }
  if (missing.empty()) return {true, ""};
  return {false, *missing.begin()};
}

KGraph towerSigma(const Tower& t) {
  if (t.levels.empty()) throw KgError("InvalidTower: no levels");
  if (t.maps.size() + 1 != t.levels.size())
    throw KgError("InvalidTower: need one map per step");
  int k = t.levels[0]->rank();
  for (size_t n = 1; n < t.levels.size(); ++n) {
    ValidationReport rep =
        verifyCovering(*t.levels[n], *t.levels[n - 1], t.maps[n - 1]);
    if (!rep.ok)
      throw KgError("InvalidTower: step " + std::to_string(n) + ": " +
                    rep.summary());
  }

  KGraph sigma(k + 1);
  std::vector<std::vector<int>> vid(t.levels.size());
  std::vector<std::vector<int>> eid(t.levels.size());
  for (size_t n = 0; n < t.levels.size(); ++n) {
    const KGraph& L = *t.levels[n];
    std::string pre = "L" + std::to_string(n) + ".";
    for (int v = 0; v < L.numVertices(); ++v)
      vid[n].push_back(sigma.addVertex(pre + L.vertexName(v)));
    for (int e = 0; e < L.numEdges(); ++e)
      eid[n].push_back(sigma.addEdge(pre + L.edge(e).name, L.edge(e).color,
                                     vid[n][L.edge(e).range],
                                     vid[n][L.edge(e).source]));
  }
  // connector edges f_v for v at level n >= 1: r = p_n(v), s = v
  std::vector<std::vector<int>> fid(t.levels.size());
  for (size_t n = 1; n < t.levels.size(); ++n) {
    const KGraph& L = *t.levels[n];
    for (int v = 0; v < L.numVertices(); ++v)
      fid[n].push_back(sigma.addEdge(
          "f.L" + std::to_string(n) + "." + L.vertexName(v), k + 1,
          vid[n - 1][t.maps[n - 1].vmap[v]], vid[n][v]));
  }
  for (size_t n = 0; n < t.levels.size(); ++n)
    for (const Square& q : t.levels[n]->squares())
      sigma.addSquare(eid[n][q.e], eid[n][q.f], eid[n][q.g], eid[n][q.h]);
  // connector squares p(lambda) f_{s(lambda)} = f_{r(lambda)} lambda
  for (size_t n = 1; n < t.levels.size(); ++n) {
    const KGraph& L = *t.levels[n];
    for (int e = 0; e < L.numEdges(); ++e)
      sigma.addSquare(eid[n - 1][t.maps[n - 1].emap[e]],
                      fid[n][L.edge(e).source], fid[n][L.edge(e).range],
                      eid[n][e]);
  }
  ValidationReport rep = sigma.validate();
  if (!rep.ok)
    throw KgError("InvalidTower: assembled graph fails validation: " +
                  rep.summary());
  return sigma;
}

ValidationReport validateAction(const AutomorphismAction& a) {
  ValidationReport rep;
  auto bad = [&](const std::string& kind, const std::string& detail) {
    rep.violations.push_back({kind, detail});
  };
  const KGraph& b = *a.base;
  for (size_t j = 0; j < a.gens.size(); ++j) {
    const GraphMorphism& g = a.gens[j];
    ValidationReport mv = validateMorphism(b, b, g);
    if (!mv.ok) {
      bad("NotAnAction", "generator " + std::to_string(j + 1) +
                             " is not a morphism: " + mv.summary());
      continue;
    }
    std::set<int> vs(g.vmap.begin(), g.vmap.end());
    std::set<int> es(g.emap.begin(), g.emap.end());
    if (static_cast<int>(vs.size()) != b.numVertices() ||
        static_cast<int>(es.size()) != b.numEdges())
      bad("NotAnAction",
          "generator " + std::to_string(j + 1) + " is not bijective");
  }
  if (!rep.violations.empty()) {
    rep.ok = false;
    return rep;
  }
  for (size_t i = 0; i < a.gens.size(); ++i)
    for (size_t j = i + 1; j < a.gens.size(); ++j) {
      GraphMorphism ij = composeMorphisms(a.gens[i], a.gens[j]);
      GraphMorphism ji = composeMorphisms(a.gens[j], a.gens[i]);
      if (ij.vmap != ji.vmap || ij.emap != ji.emap)
        bad("NotAnAction", "generators " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1) + " do not commute");
    }
  rep.ok = rep.violations.empty();
  return rep;
}

namespace {

GraphMorphism invertAutomorphism(const KGraph& b, const GraphMorphism& g) {
  GraphMorphism inv;
  inv.vmap.assign(b.numVertices(), -1);
  inv.emap.assign(b.numEdges(), -1);
  for (int v = 0; v < b.numVertices(); ++v) inv.vmap[g.vmap[v]] = v;
  for (int e = 0; e < b.numEdges(); ++e) inv.emap[g.emap[e]] = e;
  return inv;
}

}  // namespace

KGraph crossedProduct(const AutomorphismAction& a) {
  ValidationReport av = validateAction(a);
  if (!av.ok) throw KgError("NotAnAction: " + av.summary());
  const KGraph& b = *a.base;
  int k = b.rank();
  int l = static_cast<int>(a.gens.size());
  std::vector<GraphMorphism> inv;
  for (const GraphMorphism& g : a.gens) inv.push_back(invertAutomorphism(b, g));

  KGraph cp(l == 0 ? k : k + l);
  for (int v = 0; v < b.numVertices(); ++v) cp.addVertex(b.vertexName(v));
  for (int e = 0; e < b.numEdges(); ++e)
    cp.addEdge(b.edge(e).name, b.edge(e).color, b.edge(e).range,
               b.edge(e).source);
  // t_{v,j} : alpha_j^-1(v) -> v, color k+j
  std::vector<std::vector<int>> tid(l);
  for (int j = 0; j < l; ++j)
    for (int v = 0; v < b.numVertices(); ++v)
      tid[j].push_back(cp.addEdge("t" + std::to_string(j + 1) + "." +
                                      b.vertexName(v),
                                  k + j + 1, v, inv[j].vmap[v]));
  for (const Square& q : b.squares()) cp.addSquare(q.e, q.f, q.g, q.h);
  // mixed squares e t_{s(e),j} = t_{r(e),j} alpha_j^-1(e)
  for (int e = 0; e < b.numEdges(); ++e)
    for (int j = 0; j < l; ++j)
      cp.addSquare(e, tid[j][b.edge(e).source], tid[j][b.edge(e).range],
                   inv[j].emap[e]);
  // t_{v,j} t_{a_j^-1 v, j'} = t_{v,j'} t_{a_j'^-1 v, j} for j < j'
  for (int j = 0; j < l; ++j)
    for (int jp = j + 1; jp < l; ++jp)
      for (int v = 0; v < b.numVertices(); ++v)
        cp.addSquare(tid[j][v], tid[jp][inv[j].vmap[v]], tid[jp][v],
                     tid[j][inv[jp].vmap[v]]);
  ValidationReport rep = cp.validate();
  if (!rep.ok)
    throw KgError("crossed product fails validation: " + rep.summary());
  return cp;
}

std::vector<CensusRow> crossedCubeCensus(const AutomorphismAction& a) {
  const KGraph& b = *a.base;
  KGraph cp = crossedProduct(a);
  int k = b.rank();
  int l = static_cast<int>(a.gens.size());
  std::vector<CensusRow> rows;
  for (int mm = 0; mm < (1 << k); ++mm) {
    Degree m(k, 0);
    for (int i = 0; i < k; ++i)
      if (mm & (1 << i)) m[i] = 1;
    long long baseCount =
        static_cast<long long>(enumeratePaths(b, m).size());
    for (int nn = 0; nn < (1 << l); ++nn) {
      Degree n(l, 0);
      for (int j = 0; j < l; ++j)
        if (nn & (1 << j)) n[j] = 1;
      Degree full = m;
      full.insert(full.end(), n.begin(), n.end());
      long long count =
          static_cast<long long>(enumeratePaths(cp, full).size());
      rows.push_back({m, n, count, baseCount, count == baseCount});
    }
  }
  return rows;
}

}  // namespace kgr
