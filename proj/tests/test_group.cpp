#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <random>

#include "kgr/gallery.hpp"
#include "kgr/group.hpp"
#include "kgr/io.hpp"

using namespace kgr;
using boost::multiprecision::cpp_int;

TEST_CASE("word reduction") {
  CHECK(freeReduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(freeReduce({1, -1}) == Word{});
  CHECK(wordInverse({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(cyclicReduce({1, 2, 3, -2, -1}) == Word{3});
}

TEST_CASE("spanning tree") {
  KGraph g = gallery("sphere6");
  TreeData t = spanningTree(g, 0);
  int treeEdges = 0;
  for (bool b : t.isTreeEdge) treeEdges += b;
  CHECK(treeEdges == g.numVertices() - 1);
  CHECK(t.kappa[0].empty());
  for (int v = 0; v < g.numVertices(); ++v) {
    // kappa[v] is a path from the base to v through tree edges
    for (int letter : t.kappa[v]) CHECK(t.isTreeEdge[std::abs(letter) - 1]);
  }
}

TEST_CASE("spanning tree rejects disconnected graphs") {
  KGraph g(1);
  g.addVertex("a");
  g.addVertex("b");
  g.addEdge("x", 1, "a", "a");
  g.addEdge("y", 1, "b", "b");
  g.validate();
  CHECK_THROWS_WITH_AS(spanningTree(g, 0), doctest::Contains("Disconnected"),
                       KgError);
}

TEST_CASE("presentation deficiency matches Euler characteristic") {
  // #generators - #relators = 1 - chi for these square complexes
  for (const std::string& name :
       {"sphere6", "torus4", "rp2", "klein", "sphere10"}) {
    KGraph g = gallery(name);
    Pi1Data d = pi1Presentation(g, 0);
    int chi = g.numVertices() - g.numEdges() + (int)g.squares().size();
    CHECK((int)d.pres.gens.size() - (int)d.pres.relators.size() == 1 - chi);
  }
}

namespace {

// Independent abelianization oracle: determinantal divisors. D_k is the gcd
// of all k x k minors of the relator exponent matrix; the invariant factors
// are D_k / D_{k-1}.
cpp_int detRec(const std::vector<std::vector<cpp_int>>& m,
               std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return 1;
  cpp_int acc = 0;
  int sign = 1;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> r2;
    for (size_t j = 0; j < rows.size(); ++j)
      if (j != i) r2.push_back(rows[j]);
    std::vector<int> c2(cols.begin() + 1, cols.end());
    acc += sign * m[rows[i]][cols[0]] * detRec(m, r2, c2);
    sign = -sign;
  }
  return acc;
}

void combos(int n, int k, int start, std::vector<int>& cur,
            const std::function<void(const std::vector<int>&)>& fn) {
  if ((int)cur.size() == k) {
    fn(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combos(n, k, i + 1, cur, fn);
    cur.pop_back();
  }
}

AbelianInvariants oracleAbelianize(const GroupPresentation& p) {
  int g = (int)p.gens.size(), r = (int)p.relators.size();
  std::vector<std::vector<cpp_int>> m(r, std::vector<cpp_int>(g, 0));
  for (int i = 0; i < r; ++i)
    for (int letter : p.relators[i])
      m[i][std::abs(letter) - 1] += letter > 0 ? 1 : -1;
  int maxK = std::min(g, r);
  std::vector<cpp_int> divisors{1};  // D_0 = 1
  for (int k = 1; k <= maxK; ++k) {
    cpp_int d = 0;
    std::vector<int> rows, cols;
    combos(r, k, 0, rows, [&](const std::vector<int>& rs) {
      std::vector<int> cs;
      combos(g, k, 0, cs, [&](const std::vector<int>& cc) {
        d = boost::multiprecision::gcd(d, detRec(m, rs, cc));
      });
    });
    if (d == 0) break;
    divisors.push_back(d);
  }
  int rank = (int)divisors.size() - 1;  // rank of the matrix
  AbelianInvariants out;
  out.rank = g - rank;
  for (int k = 1; k <= rank; ++k) {
    cpp_int f = divisors[k] / divisors[k - 1];
    if (f > 1) out.torsion.push_back((long long)f);
  }
  return out;
}

GroupPresentation randomPresentation(std::mt19937& rng) {
  GroupPresentation p;
  std::uniform_int_distribution<int> gD(1, 4), rD(0, 4), lD(1, 6), eD(-3, 3);
  int g = gD(rng), r = rD(rng);
  for (int i = 0; i < g; ++i) p.gens.push_back("g" + std::to_string(i));
  for (int i = 0; i < r; ++i) {
    Word w;
    int len = lD(rng);
    for (int j = 0; j < len; ++j) {
      int e = eD(rng);
      if (e == 0) continue;
      int gen = std::uniform_int_distribution<int>(1, g)(rng);
      for (int t = 0; t < std::abs(e); ++t) w.push_back(e > 0 ? gen : -gen);
    }
    p.relators.push_back(w);
  }
  return p;
}

}  // namespace

TEST_CASE("abelianize agrees with the determinantal-divisor oracle") {
  std::mt19937 rng(977);
  for (int t = 0; t < 300; ++t) {
    GroupPresentation p = randomPresentation(rng);
    AbelianInvariants got = abelianize(p);
    AbelianInvariants want = oracleAbelianize(p);
    CAPTURE(t);
    CHECK(got == want);
  }
}

TEST_CASE("abelianize on fixed examples") {
  GroupPresentation free2{{"a", "b"}, {}};
  CHECK(abelianize(free2) == AbelianInvariants{2, {}});
  GroupPresentation z6{{"a"}, {{1, 1, 1, 1, 1, 1}}};
  CHECK(abelianize(z6) == AbelianInvariants{0, {6}});
  GroupPresentation z2z4{{"a", "b"}, {{1, 1}, {2, 2, 2, 2}}};
  CHECK(abelianize(z2z4) == AbelianInvariants{0, {2, 4}});
  GroupPresentation klein{{"a", "b"}, {{1, 2, 1, -2}}};
  CHECK(abelianize(klein) == AbelianInvariants{1, {2}});
  CHECK(abelianize(klein).toString() == "(1, [2])");
  CHECK(AbelianInvariants{2, {}}.toString() == "(2, [])");
}

TEST_CASE("gallery abelianizations at every base vertex") {
  auto invAt = [](const std::string& name) {
    KGraph g = gallery(name);
    AbelianInvariants first = abelianize(pi1Presentation(g, 0).pres);
    for (int v = 1; v < g.numVertices(); ++v)
      CHECK(abelianize(pi1Presentation(g, v).pres) == first);
    return first;
  };
  CHECK(invAt("sphere6") == AbelianInvariants{0, {}});
  CHECK(invAt("torus4") == AbelianInvariants{2, {}});
  CHECK(invAt("rp2") == AbelianInvariants{0, {2}});
  CHECK(invAt("klein") == AbelianInvariants{1, {2}});
  CHECK(invAt("sphere10") == AbelianInvariants{0, {}});
  CHECK(invAt("loop1") == AbelianInvariants{1, {}});
}

TEST_CASE("tietze simplification") {
  GroupPresentation trivial{{"a"}, {{1}}};
  GroupPresentation t = tietzeSimplify(trivial);
  CHECK(t.gens.empty());
  CHECK(t.relators.empty());

  GroupPresentation sphere = pi1Presentation(gallery("sphere6"), 0).pres;
  GroupPresentation s = tietzeSimplify(sphere);
  CHECK(s.gens.empty());
  CHECK(s.relators.empty());

  GroupPresentation free2{{"a", "b"}, {}};
  GroupPresentation f = tietzeSimplify(free2);
  CHECK(f.gens.size() == 2);
  CHECK(f.relators.empty());

  GroupPresentation k = tietzeSimplify(pi1Presentation(gallery("klein"), 0).pres);
  CHECK(k.gens.size() <= 2);
  CHECK(k.relators.size() <= 1);
  CHECK(abelianize(k) == AbelianInvariants{1, {2}});

  // simplification never changes the abelianization
  for (const std::string& name : galleryNames()) {
    GroupPresentation p = pi1Presentation(gallery(name), 0).pres;
    CHECK(abelianize(tietzeSimplify(p)) == abelianize(p));
  }
}

TEST_CASE("coset enumeration on known groups") {
  GroupPresentation z6{{"a"}, {{1, 1, 1, 1, 1, 1}}};
  CosetResult r = cosetEnumerate(z6, 1000);
  REQUIRE(r.finite);
  CHECK(r.order == 6);
  CHECK(traceWord(r, 0, {1, 1, 1, 1, 1, 1}) == 0);
  CHECK(traceWord(r, 0, {1}) != 0);

  GroupPresentation none{{}, {}};
  CosetResult one = cosetEnumerate(none, 10);
  REQUIRE(one.finite);
  CHECK(one.order == 1);

  // quaternion group Q8 = <a,b | a^4, a^2 b^-2, b^-1 a b a>
  GroupPresentation q8{{"a", "b"},
                       {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}};
  CosetResult q = cosetEnumerate(q8, 1000);
  REQUIRE(q.finite);
  CHECK(q.order == 8);
}

TEST_CASE("coset enumeration on gallery fundamental groups") {
  auto order = [](const std::string& name) {
    GroupPresentation p = pi1Presentation(gallery(name), 0).pres;
    return cosetEnumerate(p, 1000);
  };
  CosetResult s6 = order("sphere6");
  REQUIRE(s6.finite);
  CHECK(s6.order == 1);
  CosetResult s10 = order("sphere10");
  REQUIRE(s10.finite);
  CHECK(s10.order == 1);
  CosetResult r = order("rp2");
  REQUIRE(r.finite);
  CHECK(r.order == 2);
  CHECK_FALSE(order("torus4").finite);
  CHECK_FALSE(order("klein").finite);
}

TEST_CASE("induced homomorphism of a covering projection") {
  Covering cov = sphere10Covering();
  KGraph base = gallery("rp2");
  PresentationHom h = inducedHom(cov.total, base, cov.map, 0);
  CHECK(h.relatorsChecked);
  CHECK(h.images.size() == h.domain.gens.size());
  // pi1(sphere10) is trivial, so every image must die in pi1(rp2)
  CosetResult cr = cosetEnumerate(h.codomain, 1000);
  REQUIRE(cr.finite);
  for (const Word& w : h.images) CHECK(traceWord(cr, 0, w) == 0);
}

TEST_CASE("induced homomorphism of the identity") {
  KGraph g = gallery("klein");
  PresentationHom h = inducedHom(g, g, identityMorphism(g), 0);
  CHECK(h.relatorsChecked);
  REQUIRE(h.images.size() == h.domain.gens.size());
  for (size_t i = 0; i < h.images.size(); ++i)
    CHECK(h.images[i] == Word{(int)i + 1});
}

TEST_CASE("presentation text round trip") {
  GroupPresentation p{{"a", "b"}, {{1, 2, -1, -2}, {1, 1}}};
  std::string text = presentationToText(p);
  GroupPresentation back = presentationFromText(text);
  CHECK(back.gens == p.gens);
  CHECK(back.relators == p.relators);
  CHECK_THROWS_AS(presentationFromText("rel: a\n"), KgError);
}
