#pragma once

#include "kgr/morphism.hpp"

namespace kgr {

// A finite group as a multiplication table; element 0 need not be the
// identity.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
  int id = 0;
  std::vector<int> inv;

  static FiniteGroup fromTable(const std::vector<std::vector<int>>& table);
  static FiniteGroup cyclic(int n);
  int pow(int a, int e) const;
};

// Verifies that a subset is a subgroup; returns it closed and sorted.
std::vector<int> subgroupClosure(const FiniteGroup& g,
                                 const std::vector<int>& elements);

// A functor c : base -> group given on edges.
struct GroupLabeling {
  const KGraph* base = nullptr;
  FiniteGroup group;
  std::vector<int> label;  // per edge
};

ValidationReport validateLabeling(const GroupLabeling& l);

struct Covering {
  KGraph total{1};    // the covering k-graph Omega
  GraphMorphism map;  // projection Omega -> base
};

// Skew product: vertices base^0 x G, edge (e, x) from (s(e), x*c(e)) to
// (r(e), x). Vertex names are "v.g<i>", edge names "e.g<i>".
Covering skewProduct(const GroupLabeling& l);

// Relative version over right cosets G/H; names use "v.c<i>" for coset i.
Covering relativeSkewProduct(const GroupLabeling& l,
                             const std::vector<int>& subgroup);

// Covering axioms: valid surjective morphism, bijective on in/out edge sets
// at every vertex, and exact degree-|n|<=2 path bijections.
ValidationReport verifyCovering(const KGraph& total, const KGraph& base,
                                const GraphMorphism& p);

std::vector<int> fiber(const KGraph& total, const KGraph& base,
                       const GraphMorphism& p, int baseVertex);

// All automorphisms gamma of the total space with p o gamma = p.
std::vector<GraphMorphism> deckGroup(const KGraph& total, const KGraph& base,
                                     const GraphMorphism& p);

bool isRegular(const KGraph& total, const KGraph& base,
               const GraphMorphism& p);

// Backtracking isomorphism search between two k-graphs.
std::optional<GraphMorphism> findIsomorphism(const KGraph& a,
                                             const KGraph& b);

// Connected component count of the undirected 1-skeleton.
int componentCount(const KGraph& g);

// Unique lift of a base path starting at the total-space vertex `at` over
// r(path); requires a verified covering.
std::optional<Path> liftPath(const KGraph& total, const KGraph& base,
                             const GraphMorphism& p, const Path& path,
                             int at);

}  // namespace kgr
