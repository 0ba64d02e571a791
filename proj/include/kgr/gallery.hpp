#pragma once

#include "kgr/covering.hpp"

namespace kgr {

// Built-in examples: sphere6, torus4, rp2, klein, sphere10, loop1.
std::vector<std::string> galleryNames();
KGraph gallery(const std::string& name);

// The lexicographically first Z/2 edge labeling of rp2 whose skew product
// is a connected closed surface with Euler characteristic 2.
std::vector<int> sphere10Labels(const KGraph& rp2);

// sphere10 together with its 2-fold projection onto rp2.
Covering sphere10Covering();

}  // namespace kgr
