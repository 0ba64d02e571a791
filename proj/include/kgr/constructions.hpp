#pragma once

#include "kgr/covering.hpp"

namespace kgr {

// A functor dom -> cod with d(phi(lambda)) = pi(d(lambda)) for a monoid map
// pi : N^k -> N^l given by the images of the unit vectors.
struct Quasimorphism {
  const KGraph* dom = nullptr;
  const KGraph* cod = nullptr;
  std::vector<Degree> piGen;  // piGen[i-1] = pi(e_i), an N^l vector
  std::vector<int> vmap;
  std::vector<Path> emap;  // image path per domain edge
};

ValidationReport validateQuasimorphism(const Quasimorphism& q);

Path applyQuasimorphism(const Quasimorphism& q, const Path& p);

// The induced map on realization points: [lambda, t] -> [phi(lambda), pi(t)].
std::pair<Path, RealPoint> inducedPointMap(const Quasimorphism& q,
                                           const Path& p, const RealPoint& t);

struct WeakSurjectivity {
  bool verified = false;
  std::string counterexample;  // a codomain path id when not verified
};

// Bounded search only; `verified` is no proof beyond the degree bound.
WeakSurjectivity checkWeakSurjectivity(const Quasimorphism& q,
                                       int degreeBound);

struct Tower {
  std::vector<const KGraph*> levels;   // Lambda_0 .. Lambda_N
  std::vector<GraphMorphism> maps;     // p_n : Lambda_n -> Lambda_{n-1}
};

// The (k+1)-graph assembling a tower of coverings: connector edges f_v with
// squares p(lambda) f_{s(lambda)} = f_{r(lambda)} lambda. Names are prefixed
// "L<n>."; connectors are "f.L<n>.<vertex>".
KGraph towerSigma(const Tower& t);

struct AutomorphismAction {
  const KGraph* base = nullptr;
  std::vector<GraphMorphism> gens;  // commuting automorphisms alpha_1..alpha_l
};

ValidationReport validateAction(const AutomorphismAction& a);

// The (k+l)-graph with composition (lambda,m)(mu,n) = (lambda alpha_m(mu),
// m+n). New color k+j edges are "t<j>.<vertex>" from alpha_j^-1(v) to v.
KGraph crossedProduct(const AutomorphismAction& a);

struct CensusRow {
  Degree m, n;
  long long count = 0;      // cubes of degree (m, n) in the crossed product
  long long baseCount = 0;  // cubes of degree m in the base
  bool equal = false;
};

std::vector<CensusRow> crossedCubeCensus(const AutomorphismAction& a);

}  // namespace kgr
