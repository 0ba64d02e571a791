#pragma once

#include "kgr/constructions.hpp"
#include "kgr/group.hpp"

namespace kgr {

// One item per line, '#' comments:
//   rank K
//   vertex NAME
//   edge NAME color=I : RANGE <- SOURCE
//   square E F = G H
KGraph parseKGraph(const std::string& text);
std::string printKGraph(const KGraph& g);

// order: N followed by N rows of the multiplication table.
FiniteGroup parseGroup(const std::string& text);
std::string printGroup(const FiniteGroup& g);

// label EDGE = gI   (one line per edge of `base`)
GroupLabeling parseLabels(const std::string& text, const KGraph& base,
                          const FiniteGroup& group);

// vertex V W / edge E F lines (domain name, codomain name).
GraphMorphism parseMorphism(const std::string& text, const KGraph& dom,
                            const KGraph& cod);

// alphaJ: a->b, c->d, ...  names resolve to vertices or edges; omitted
// items are fixed.
AutomorphismAction parseAction(const std::string& text, const KGraph& base);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& text);

}  // namespace kgr
