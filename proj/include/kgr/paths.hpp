#pragma once

#include <boost/rational.hpp>

#include "kgr/kgraph.hpp"

namespace kgr {

using Rat = boost::rational<long long>;
// A point of [0, d(lambda)] in R^k with exact rational coordinates.
using RealPoint = std::vector<Rat>;

Degree ratFloor(const RealPoint& t);
Degree ratCeil(const RealPoint& t);
RealPoint toRealPoint(const Degree& n);

Path vertexPath(const KGraph& g, int v);
Path edgePath(const KGraph& g, int e);

// Builds the normal form of a composable edge sequence (leftmost traversed
// last). Throws NotComposable on a broken chain.
Path makePath(const KGraph& g, const std::vector<int>& edges);
Path makePath(const KGraph& g, int range, const std::vector<int>& edges);

Path compose(const KGraph& g, const Path& a, const Path& b);

// lambda(m, n) for m <= n <= d(lambda).
Path segment(const KGraph& g, const Path& p, const Degree& m, const Degree& n);

// All normal-form paths of degree n, optionally restricted to range (vL^n)
// and/or source (L^n v). Throws BoundExceeded when |n| > bound.
std::vector<Path> enumeratePaths(const KGraph& g, const Degree& n,
                                 std::optional<int> range = std::nullopt,
                                 std::optional<int> source = std::nullopt,
                                 int bound = 8);

// Canonical representative of [lambda, t]: the cube lambda(floor t, ceil t)
// together with t - floor t.
std::pair<Path, RealPoint> canonicalPoint(const KGraph& g, const Path& p,
                                          const RealPoint& t);

std::string pathId(const KGraph& g, const Path& p);
Path parsePathLiteral(const KGraph& g, const std::string& text);

}  // namespace kgr
