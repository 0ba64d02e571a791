#pragma once

#include "kgr/paths.hpp"

namespace kgr {

// A color-preserving k-graph morphism given on the skeleton: vmap[v] and
// emap[e] are codomain indices.
struct GraphMorphism {
  std::vector<int> vmap;
  std::vector<int> emap;
};

// Checks that the maps commute with r and s, preserve colors, and send
// squares to squares.
ValidationReport validateMorphism(const KGraph& dom, const KGraph& cod,
                                  const GraphMorphism& m);

GraphMorphism identityMorphism(const KGraph& g);
GraphMorphism composeMorphisms(const GraphMorphism& first,
                               const GraphMorphism& second);

Path applyMorphism(const KGraph& dom, const KGraph& cod,
                   const GraphMorphism& m, const Path& p);

}  // namespace kgr
