#include <doctest.h>

#include "kgr/gallery.hpp"
#include "kgr/io.hpp"

using namespace kgr;

TEST_CASE("k-graph text round trips the gallery") {
  for (const std::string& name : galleryNames()) {
    KGraph g = gallery(name);
    KGraph back = parseKGraph(printKGraph(g));
    CHECK(back.rank() == g.rank());
    CHECK(back.numVertices() == g.numVertices());
    CHECK(back.numEdges() == g.numEdges());
    CHECK(back.squares().size() == g.squares().size());
    CHECK(back.validate().ok);
    for (int v = 0; v < g.numVertices(); ++v)
      CHECK(back.vertexName(v) == g.vertexName(v));
    for (int e = 0; e < g.numEdges(); ++e) {
      CHECK(back.edge(e).name == g.edge(e).name);
      CHECK(back.edge(e).color == g.edge(e).color);
      CHECK(back.edge(e).range == g.edge(e).range);
      CHECK(back.edge(e).source == g.edge(e).source);
    }
    // second round trip is stable
    CHECK(printKGraph(back) == printKGraph(g));
  }
}

TEST_CASE("data files match the gallery") {
  for (const std::string& name : galleryNames()) {
    std::string path = std::string(KGR_DATA_DIR) + "/" + name + ".kg";
    KGraph fromFile = parseKGraph(readFile(path));
    fromFile.validate();
    CHECK(findIsomorphism(fromFile, gallery(name)).has_value());
  }
}

TEST_CASE("k-graph parser accepts comments and blank lines") {
  KGraph g = parseKGraph(
      "# a lonely loop\n"
      "rank 2\n"
      "\n"
      "vertex v\n"
      "edge x color=1 : v <- v   # the loop\n"
      "edge y color=2 : v <- v\n"
      "square x y = y x\n");
  CHECK(g.rank() == 2);
  CHECK(g.validate().ok);
}

TEST_CASE("k-graph parser reports line numbers") {
  auto expectError = [](const std::string& text, const std::string& needle) {
    try {
      parseKGraph(text);
      FAIL_CHECK("no error for: " << text);
    } catch (const KgError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expectError("vertex v\n", "rank");
  expectError("rank 2\nvertex v\nvertex v\n", "line 3");
  expectError("rank 2\nvertex v\nedge x color=5 : v <- v\n", "line 3");
  expectError("rank 2\nvertex v\nedge x color=1 : v <- w\n", "line 3");
  expectError("rank 1\nvertex v\nedge x color=1 : v <- v\nsquare x x = x\n",
              "line 4");
  expectError("rank 1\nvertex v\nsquare a b = c d\n", "line 3");
  expectError("rank 0\n", "rank");
}

TEST_CASE("an empty rank-2 graph parses") {
  KGraph g = parseKGraph("rank 2\n");
  CHECK(g.numVertices() == 0);
  CHECK(g.validate().ok);
}

TEST_CASE("group table text") {
  FiniteGroup g = parseGroup("order: 2\n0 1\n1 0\n");
  CHECK(g.order == 2);
  CHECK(g.id == 0);
  FiniteGroup back = parseGroup(printGroup(g));
  CHECK(back.mul == g.mul);
  CHECK_THROWS_AS(parseGroup("order: 2\n0 1\n"), KgError);
  CHECK_THROWS_AS(parseGroup("0 1\n1 0\n"), KgError);
}

TEST_CASE("labeling text") {
  KGraph rp2 = gallery("rp2");
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  std::string text =
      "label a = g0\nlabel b = g1\nlabel c = g1\nlabel d = g0\n"
      "label e = g0\nlabel f = g0\nlabel g = g1\nlabel h = g0\n";
  GroupLabeling l = parseLabels(text, rp2, z2);
  CHECK(l.label == sphere10Labels(rp2));
  CHECK(validateLabeling(l).ok);
  CHECK_THROWS_AS(parseLabels("label a = g1\n", rp2, z2), KgError);
  CHECK_THROWS_AS(parseLabels(text + "label zz = g0\n", rp2, z2), KgError);
}

TEST_CASE("morphism text") {
  KGraph loop = gallery("loop1");
  GraphMorphism m = parseMorphism("vertex v v\nedge e e\n", loop, loop);
  CHECK(validateMorphism(loop, loop, m).ok);
  CHECK_THROWS_AS(parseMorphism("vertex v v\n", loop, loop), KgError);
  CHECK_THROWS_AS(parseMorphism("vertex v zz\nedge e e\n", loop, loop),
                  KgError);
}

TEST_CASE("action text") {
  KGraph rp2 = gallery("rp2");
  AutomorphismAction a =
      parseAction("alpha1: c->d, d->c, g->h, h->g\n", rp2);
  REQUIRE(a.gens.size() == 1);
  CHECK(validateAction(a).ok);
  CHECK(a.gens[0].emap[*rp2.edgeIndex("c")] == *rp2.edgeIndex("d"));
  // omitted items are fixed
  CHECK(a.gens[0].emap[*rp2.edgeIndex("a")] == *rp2.edgeIndex("a"));

  AutomorphismAction id = parseAction("alpha1: \n", rp2);
  REQUIRE(id.gens.size() == 1);
  CHECK(validateAction(id).ok);

  CHECK_THROWS_AS(parseAction("alpha1: c->zz\n", rp2), KgError);
  CHECK_THROWS_AS(parseAction("beta: c->d\n", rp2), KgError);
}
