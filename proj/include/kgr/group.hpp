#pragma once

#include "kgr/morphism.hpp"

namespace kgr {

// A word over a signed alphabet: letter +-(i+1) means generator i (inverse
// when negative), read left to right as category composition.
using Word = std::vector<int>;

Word wordInverse(const Word& w);
Word freeReduce(const Word& w);
Word cyclicReduce(const Word& w);

struct GroupPresentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;
};

struct TreeData {
  int base = -1;
  // parentEdge[v] = edge id connecting v toward the root (-1 at the root);
  // parentSign[v] = +1 when that edge has range v (points from the parent
  // side into v as a path letter), -1 otherwise.
  std::vector<int> parentEdge;
  std::vector<int> parentSign;
  std::vector<bool> isTreeEdge;
  // kappa[v]: word in edge letters from the base out to v (r = v, s = base).
  std::vector<Word> kappa;
};

TreeData spanningTree(const KGraph& g, int base);

struct Pi1Data {
  GroupPresentation pres;
  TreeData tree;
  // genOfEdge[e] = generator index, or -1 for tree edges.
  std::vector<int> genOfEdge;
};

Pi1Data pi1Presentation(const KGraph& g, int base);

struct AbelianInvariants {
  int rank = 0;
  std::vector<long long> torsion;  // d1 | d2 | ..., each >= 2
  bool operator==(const AbelianInvariants&) const = default;
  std::string toString() const;
};

AbelianInvariants abelianize(const GroupPresentation& p);

GroupPresentation tietzeSimplify(const GroupPresentation& p,
                                 int budget = 1000);

struct CosetResult {
  bool finite = false;
  long long order = 0;  // valid when finite
  // When finite: the completed table (regular representation). Row = coset,
  // column 2*i / 2*i+1 = action of generator i / its inverse.
  std::vector<std::vector<int>> table;
};

// Image of coset `from` under w in a completed table.
int traceWord(const CosetResult& r, int from, const Word& w);

// Todd-Coxeter over the trivial subgroup (HLT). finite=false means the
// table bound was hit, not a proof of infiniteness.
CosetResult cosetEnumerate(const GroupPresentation& p, long long maxCosets);

struct PresentationHom {
  GroupPresentation domain;
  GroupPresentation codomain;
  std::vector<Word> images;  // per domain generator, a codomain word
  bool relatorsChecked = false;
};

// The map on fundamental groups induced by a k-graph morphism, with the
// codomain presentation based at the image of `base`. Relators are checked
// to die in the codomain by coset enumeration of the quotient.
PresentationHom inducedHom(const KGraph& dom, const KGraph& cod,
                           const GraphMorphism& m, int base);

std::string presentationToText(const GroupPresentation& p);
GroupPresentation presentationFromText(const std::string& text);

}  // namespace kgr
