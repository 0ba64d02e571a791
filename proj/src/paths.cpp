#include "kgr/paths.hpp"

#include <algorithm>
#include <sstream>

namespace kgr {

Degree ratFloor(const RealPoint& t) {
  Degree d(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    long long q = t[i].numerator() / t[i].denominator();
    if (t[i] < Rat(q)) --q;
    d[i] = static_cast<int>(q);
  }
  return d;
}

Degree ratCeil(const RealPoint& t) {
  Degree d(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    long long q = t[i].numerator() / t[i].denominator();
    if (t[i] > Rat(q)) ++q;
    d[i] = static_cast<int>(q);
  }
  return d;
}

RealPoint toRealPoint(const Degree& n) {
  RealPoint t(n.size());
  for (size_t i = 0; i < n.size(); ++i) t[i] = Rat(n[i]);
  return t;
}

Path vertexPath(const KGraph& g, int v) {
  return Path{degZero(g.rank()), v, v, {}};
}

Path edgePath(const KGraph& g, int e) {
  const Edge& ed = g.edge(e);
  return Path{degUnit(g.rank(), ed.color), ed.range, ed.source, {e}};
}

namespace {

void checkChain(const KGraph& g, const std::vector<int>& es) {
  for (size_t i = 0; i + 1 < es.size(); ++i)
    if (g.edge(es[i]).source != g.edge(es[i + 1]).range)
      throw KgError("NotComposable: " + g.edge(es[i]).name + " then " +
                    g.edge(es[i + 1]).name);
}

// Bubble-sorts colors using square swaps; the result is the unique normal
// form by the factorization property.
void normalizeEdges(const KGraph& g, std::vector<int>& es) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < es.size(); ++i) {
      if (g.edge(es[i]).color > g.edge(es[i + 1]).color) {
        auto sw = g.swapPair(es[i], es[i + 1]);
        if (!sw)
          throw KgError("MissingSquare: cannot swap " + g.edge(es[i]).name +
                        " " + g.edge(es[i + 1]).name);
        es[i] = sw->first;
        es[i + 1] = sw->second;
        changed = true;
      }
    }
  }
}

}  // namespace

Path makePath(const KGraph& g, const std::vector<int>& edges) {
  if (edges.empty()) throw KgError("makePath: empty sequence needs a vertex");
  return makePath(g, g.edge(edges.front()).range, edges);
}

Path makePath(const KGraph& g, int range, const std::vector<int>& edges) {
  g.requireValidated();
  if (edges.empty()) return vertexPath(g, range);
  if (g.edge(edges.front()).range != range)
    throw KgError("makePath: range mismatch");
  checkChain(g, edges);
  std::vector<int> es = edges;
  normalizeEdges(g, es);
  Degree d = degZero(g.rank());
  for (int e : es) d[g.edge(e).color - 1] += 1;
  return Path{d, g.edge(es.front()).range, g.edge(es.back()).source, es};
}

Path compose(const KGraph& g, const Path& a, const Path& b) {
  g.requireValidated();
  if (a.source != b.range)
    throw KgError("NotComposable: s(first) != r(second)");
  std::vector<int> es = a.edges;
  es.insert(es.end(), b.edges.begin(), b.edges.end());
  return makePath(g, a.range, es);
}

namespace {

// Splits p = prefix * rest with d(prefix) = m.
std::pair<Path, Path> splitPath(const KGraph& g, const Path& p,
                                const Degree& m) {
  Degree need = m;
  std::vector<int> rest = p.edges;
  std::vector<int> prefix;
  int restRange = p.range;
  while (degTotal(need) > 0) {
    int color = 0;
    for (int i = 0; i < g.rank(); ++i)
      if (need[i] > 0) {
        color = i + 1;
        break;
      }
    size_t idx = 0;
    while (idx < rest.size() && g.edge(rest[idx]).color != color) ++idx;
    // Bubble the first color-`color` edge to the front via swaps.
    for (size_t j = idx; j > 0; --j) {
      auto sw = g.swapPair(rest[j - 1], rest[j]);
      rest[j - 1] = sw->first;
      rest[j] = sw->second;
    }
    prefix.push_back(rest.front());
    rest.erase(rest.begin());
    need[color - 1] -= 1;
  }
  Path pre = prefix.empty() ? vertexPath(g, p.range)
                            : makePath(g, p.range, prefix);
  int midRange = prefix.empty() ? restRange : g.edge(prefix.back()).source;
  Path post = rest.empty() ? vertexPath(g, midRange)
                           : makePath(g, midRange, rest);
  return {pre, post};
}

}  // namespace

Path segment(const KGraph& g, const Path& p, const Degree& m,
             const Degree& n) {
  g.requireValidated();
  if (!degLe(degZero(g.rank()), m) || !degLe(m, n) || !degLe(n, p.degree))
    throw KgError("DegreeOutOfRange: need 0 <= m <= n <= d(path)");
  auto [pre, rest] = splitPath(g, p, m);
  (void)pre;
  auto [mid, post] = splitPath(g, rest, degSub(n, m));
  (void)post;
  return mid;
}

namespace {

void enumerateRec(const KGraph& g, Degree remaining, int atVertex,
                  std::optional<int> source, std::vector<int>& current,
                  int startRange, std::vector<Path>& outp) {
  if (degTotal(remaining) == 0) {
    if (source && atVertex != *source) return;
    if (current.empty()) {
      outp.push_back(vertexPath(g, startRange));
    } else {
      Degree d = degZero(g.rank());
      for (int e : current) d[g.edge(e).color - 1] += 1;
      outp.push_back(Path{d, startRange, atVertex, current});
    }
    return;
  }
  int color = 0;
  for (int i = 0; i < g.rank(); ++i)
    if (remaining[i] > 0) {
      color = i + 1;
      break;
    }
  remaining[color - 1] -= 1;
  for (int e : g.edgesOutOf(atVertex, color)) {
    current.push_back(e);
    enumerateRec(g, remaining, g.edge(e).source, source, current, startRange,
                 outp);
    current.pop_back();
  }
  remaining[color - 1] += 1;
}

}  // namespace

std::vector<Path> enumeratePaths(const KGraph& g, const Degree& n,
                                 std::optional<int> range,
                                 std::optional<int> source, int bound) {
  g.requireValidated();
  if (static_cast<int>(n.size()) != g.rank())
    throw KgError("degree has wrong rank");
  if (degTotal(n) > bound) throw KgError("BoundExceeded");
  std::vector<Path> outp;
  std::vector<int> current;
  if (range) {
    enumerateRec(g, n, *range, source, current, *range, outp);
  } else {
    for (int v = 0; v < g.numVertices(); ++v)
      enumerateRec(g, n, v, source, current, v, outp);
  }
  return outp;
}

std::pair<Path, RealPoint> canonicalPoint(const KGraph& g, const Path& p,
                                          const RealPoint& t) {
  g.requireValidated();
  if (static_cast<int>(t.size()) != g.rank())
    throw KgError("point has wrong rank");
  for (int i = 0; i < g.rank(); ++i)
    if (t[i] < Rat(0) || t[i] > Rat(p.degree[i]))
      throw KgError("PointOutOfRange");
  Degree fl = ratFloor(t), ce = ratCeil(t);
  Path cube = segment(g, p, fl, ce);
  RealPoint s(t.size());
  for (size_t i = 0; i < t.size(); ++i) s[i] = t[i] - Rat(fl[i]);
  return {cube, s};
}

std::string pathId(const KGraph& g, const Path& p) {
  if (p.edges.empty()) return g.vertexName(p.range);
  std::string id;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    if (i) id += '*';
    id += g.edge(p.edges[i]).name;
  }
  return id;
}

Path parsePathLiteral(const KGraph& g, const std::string& text) {
  if (auto v = g.vertexIndex(text)) return vertexPath(g, *v);
  std::vector<int> es;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '*')) {
    auto e = g.edgeIndex(part);
    if (!e) throw KgError("unknown edge in path literal: " + part);
    es.push_back(*e);
  }
  if (es.empty()) throw KgError("empty path literal");
  return makePath(g, es);
}

}  // namespace kgr
