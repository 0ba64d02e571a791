#pragma once

// A quasimorphism with pi(n) = 2n between two 1-graph truncations whose
// induced point map identifies two distinct 1-cubes.

namespace props {

struct Counterexample {
  KGraph dom{1};
  KGraph cod{1};
  Quasimorphism q;
};

inline Counterexample buildCounterexample() {
  Counterexample cx;
  KGraph& d = cx.dom;
  for (const char* v : {"v0", "v1", "m1", "m2", "p1", "p2"}) d.addVertex(v);
  d.addEdge("tau1", 1, "v0", "v1");
  d.addEdge("mu", 1, "m1", "v0");
  d.addEdge("alpha1", 1, "m2", "m1");
  d.addEdge("nu", 1, "p1", "v0");
  d.addEdge("beta1", 1, "p2", "p1");
  d.validate();

  KGraph& c = cx.cod;
  for (const char* v :
       {"v0", "v1", "v2", "v3", "m1", "m2", "m3", "p1", "p2", "p3"})
    c.addVertex(v);
  c.addEdge("tau1", 1, "v0", "v1");
  c.addEdge("tau2", 1, "v1", "v2");
  c.addEdge("tau3", 1, "v2", "v3");
  c.addEdge("mu", 1, "m1", "v0");
  c.addEdge("alpha1", 1, "m2", "m1");
  c.addEdge("alpha2", 1, "m3", "m2");
  c.addEdge("nu", 1, "p1", "v0");
  c.addEdge("beta1", 1, "p2", "p1");
  c.addEdge("beta2", 1, "p3", "p2");
  c.validate();

  Quasimorphism& q = cx.q;
  q.dom = &d;
  q.cod = &c;
  q.piGen = {Degree{2}};
  auto v = [&](const char* n) { return *d.vertexIndex(n); };
  auto cv = [&](const char* n) { return *c.vertexIndex(n); };
  q.vmap.assign(d.numVertices(), -1);
  q.vmap[v("v0")] = cv("v1");
  q.vmap[v("v1")] = cv("v3");
  q.vmap[v("m1")] = cv("m1");
  q.vmap[v("m2")] = cv("m3");
  q.vmap[v("p1")] = cv("p1");
  q.vmap[v("p2")] = cv("p3");
  auto ce = [&](const char* n) { return *c.edgeIndex(n); };
  auto path2 = [&](const char* first, const char* second) {
    return makePath(c, {ce(first), ce(second)});
  };
  q.emap.assign(d.numEdges(), Path{});
  q.emap[*d.edgeIndex("tau1")] = path2("tau2", "tau3");
  q.emap[*d.edgeIndex("mu")] = path2("mu", "tau1");
  q.emap[*d.edgeIndex("alpha1")] = path2("alpha2", "alpha1");
  q.emap[*d.edgeIndex("nu")] = path2("nu", "tau1");
  q.emap[*d.edgeIndex("beta1")] = path2("beta2", "beta1");
  return cx;
}

inline std::string counterexampleWitness() {
  Counterexample cx = buildCounterexample();
  if (!validateQuasimorphism(cx.q).ok) return "counterexample map invalid";
  const KGraph& d = cx.dom;
  const KGraph& c = cx.cod;
  Path mu = edgePath(d, *d.edgeIndex("mu"));
  Path nu = edgePath(d, *d.edgeIndex("nu"));
  Path tau1 = edgePath(c, *c.edgeIndex("tau1"));

  auto a = inducedPointMap(cx.q, mu, {Rat(3, 4)});
  auto b = inducedPointMap(cx.q, nu, {Rat(3, 4)});
  if (!(a.first == tau1) || a.second != RealPoint{Rat(1, 2)})
    return "witness at mu is not (tau1, 1/2)";
  if (!(a.first == b.first) || a.second != b.second)
    return "witness points differ";

  std::mt19937 rng(kSeed + 5);
  std::uniform_int_distribution<long long> den(3, 64);
  for (int t = 0; t < kCases; ++t) {
    long long q = den(rng);
    std::uniform_int_distribution<long long> num(q / 2 + 1, q - 1);
    Rat s(num(rng), q);  // s in (1/2, 1)
    auto x = inducedPointMap(cx.q, mu, {s});
    auto y = inducedPointMap(cx.q, nu, {s});
    if (!(x.first == tau1) || !(x.first == y.first) || x.second != y.second ||
        x.second != RealPoint{Rat(2) * s - Rat(1)})
      return "case " + std::to_string(t) + ": collapse formula fails";
    // below 1/2 the branches stay distinct
    Rat small = s / Rat(2);
    auto xm = inducedPointMap(cx.q, mu, {small});
    auto ym = inducedPointMap(cx.q, nu, {small});
    if (xm.first == ym.first)
      return "case " + std::to_string(t) + ": branches merged early";
  }
  return "";
}

}  // namespace props
