#include <doctest.h>

#include "kgr/gallery.hpp"

using namespace kgr;

TEST_CASE("finite group tables") {
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  CHECK(z3.order == 3);
  CHECK(z3.id == 0);
  CHECK(z3.inv[1] == 2);
  CHECK(z3.pow(1, 5) == 2);
  CHECK(z3.pow(1, -1) == 2);

  // not associative: a*a = a for all a but mixed products break
  CHECK_THROWS_AS(FiniteGroup::fromTable({{0, 1}, {0, 1}}), KgError);
  CHECK_THROWS_AS(FiniteGroup::fromTable({{0, 1}, {1, 5}}), KgError);
  CHECK_THROWS_AS(FiniteGroup::fromTable({{1, 0}, {1, 0}}), KgError);
  CHECK_THROWS_AS(FiniteGroup::fromTable({}), KgError);
}

TEST_CASE("subgroup closure") {
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  CHECK(subgroupClosure(z6, {2}) == std::vector<int>{0, 2, 4});
  CHECK(subgroupClosure(z6, {}) == std::vector<int>{0});
  CHECK(subgroupClosure(z6, {1}).size() == 6);
}

TEST_CASE("labeling validation") {
  KGraph rp2 = gallery("rp2");
  GroupLabeling l{&rp2, FiniteGroup::cyclic(2), sphere10Labels(rp2)};
  CHECK(validateLabeling(l).ok);

  GroupLabeling bad = l;
  bad.label[0] ^= 1;  // breaks functoriality on a square
  CHECK_FALSE(validateLabeling(bad).ok);

  GroupLabeling wrongCount = l;
  wrongCount.label.pop_back();
  CHECK_FALSE(validateLabeling(wrongCount).ok);
}

TEST_CASE("skew product by the trivial group is the base") {
  KGraph base = gallery("torus4");
  GroupLabeling l{&base, FiniteGroup::cyclic(1),
                  std::vector<int>(base.numEdges(), 0)};
  Covering cov = skewProduct(l);
  CHECK(cov.total.numVertices() == base.numVertices());
  CHECK(findIsomorphism(cov.total, base).has_value());
  CHECK(verifyCovering(cov.total, base, cov.map).ok);
}

TEST_CASE("skew product of loop1 by Z/3") {
  KGraph base = gallery("loop1");
  GroupLabeling l{&base, FiniteGroup::cyclic(3), {1}};
  Covering cov = skewProduct(l);
  CHECK(cov.total.numVertices() == 3);
  CHECK(cov.total.numEdges() == 3);
  CHECK(componentCount(cov.total) == 1);
  CHECK(verifyCovering(cov.total, base, cov.map).ok);
  CHECK(fiber(cov.total, base, cov.map, 0).size() == 3);
  CHECK(deckGroup(cov.total, base, cov.map).size() == 3);
  CHECK(isRegular(cov.total, base, cov.map));

  // label 0 instead disconnects the total space into |G| copies
  GroupLabeling l0{&base, FiniteGroup::cyclic(3), {0}};
  CHECK(componentCount(skewProduct(l0).total) == 3);
}

TEST_CASE("sphere10 covering of rp2") {
  Covering cov = sphere10Covering();
  KGraph base = gallery("rp2");
  CHECK(verifyCovering(cov.total, base, cov.map).ok);
  CHECK(componentCount(cov.total) == 1);
  auto deck = deckGroup(cov.total, base, cov.map);
  CHECK(deck.size() == 2);
  CHECK(isRegular(cov.total, base, cov.map));
  // the nontrivial deck transformation is fixed-point free
  int fixed = 0;
  for (const GraphMorphism& g : deck) {
    bool identity = true;
    for (int v = 0; v < cov.total.numVertices(); ++v)
      identity &= g.vmap[v] == v;
    if (identity) continue;
    for (int v = 0; v < cov.total.numVertices(); ++v)
      if (g.vmap[v] == v) ++fixed;
  }
  CHECK(fixed == 0);
}

TEST_CASE("relative skew products") {
  KGraph rp2 = gallery("rp2");
  std::vector<int> z2labels = sphere10Labels(rp2);
  // a Z/4 labeling (a = e = 1) whose mod-2 reduction is square-consistent
  std::vector<int> z4labels(rp2.numEdges(), 0);
  z4labels[*rp2.edgeIndex("a")] = 1;
  z4labels[*rp2.edgeIndex("e")] = 1;
  GroupLabeling l4{&rp2, FiniteGroup::cyclic(4), z4labels};
  REQUIRE(validateLabeling(l4).ok);

  // H = G collapses to the base
  Covering whole = relativeSkewProduct(l4, {0, 1, 2, 3});
  CHECK(findIsomorphism(whole.total, rp2).has_value());

  // H = {0, 2} quotients the 4-fold cover down to the mod-2 skew product
  Covering half = relativeSkewProduct(l4, {0, 2});
  CHECK(half.total.numVertices() == 10);
  CHECK(verifyCovering(half.total, rp2, half.map).ok);
  GroupLabeling mod2{&rp2, FiniteGroup::cyclic(2), {}};
  for (int x : z4labels) mod2.label.push_back(x % 2);
  CHECK(findIsomorphism(half.total, skewProduct(mod2).total).has_value());

  // H = {e} is the plain skew product
  GroupLabeling l2{&rp2, FiniteGroup::cyclic(2), z2labels};
  Covering rel = relativeSkewProduct(l2, {0});
  Covering skew = skewProduct(l2);
  CHECK(findIsomorphism(rel.total, skew.total).has_value());

  // {0, 1} is not closed in Z/4
  CHECK_THROWS_WITH_AS(relativeSkewProduct(l4, {1}),
                       doctest::Contains("NotASubgroup"), KgError);
}

TEST_CASE("verifyCovering rejects a non-covering") {
  KGraph base = gallery("loop1");
  KGraph total(1);
  total.addVertex("u");
  total.addEdge("x", 1, "u", "u");
  total.addEdge("y", 1, "u", "u");
  total.validate();
  GraphMorphism p{{0}, {0, 0}};
  ValidationReport rep = verifyCovering(total, base, p);
  CHECK_FALSE(rep.ok);
  bool sawStar = false;
  for (const Violation& v : rep.violations)
    sawStar |= v.kind == "NotBijectiveOnStar";
  CHECK(sawStar);
}

TEST_CASE("an irregular covering of the two-loop rose") {
  KGraph base(1);
  base.addVertex("v");
  base.addEdge("a", 1, "v", "v");
  base.addEdge("b", 1, "v", "v");
  base.validate();

  // 3-fold cover from the permutations a -> (0 1), b -> (1 2)
  KGraph total(1);
  for (int i = 0; i < 3; ++i) total.addVertex("v" + std::to_string(i));
  int sa[3] = {1, 0, 2}, sb[3] = {0, 2, 1};
  GraphMorphism p;
  p.vmap = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    total.addEdge("a" + std::to_string(i), 1, i, sa[i]);
    p.emap.push_back(0);
  }
  for (int i = 0; i < 3; ++i) {
    total.addEdge("b" + std::to_string(i), 1, i, sb[i]);
    p.emap.push_back(1);
  }
  total.validate();

  CHECK(componentCount(total) == 1);
  CHECK(verifyCovering(total, base, p).ok);
  CHECK(deckGroup(total, base, p).size() == 1);
  CHECK_FALSE(isRegular(total, base, p));
}

TEST_CASE("path lifting") {
  Covering cov = sphere10Covering();
  KGraph base = gallery("rp2");
  Path p = makePath(base, {*base.edgeIndex("c"), *base.edgeIndex("e")});
  for (int at : fiber(cov.total, base, cov.map, p.range)) {
    auto lift = liftPath(cov.total, base, cov.map, p, at);
    REQUIRE(lift.has_value());
    CHECK(lift->range == at);
    CHECK(applyMorphism(cov.total, base, cov.map, *lift) == p);
  }
  // lifting fails when started off the fiber
  int elsewhere = -1;
  for (int w = 0; w < cov.total.numVertices(); ++w)
    if (cov.map.vmap[w] != p.range) elsewhere = w;
  CHECK_FALSE(liftPath(cov.total, base, cov.map, p, elsewhere).has_value());
}
