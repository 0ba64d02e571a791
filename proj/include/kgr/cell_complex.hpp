#pragma once

#include <map>
#include <string>
#include <vector>

#include "kgr/paths.hpp"

namespace kgr {

// The cubical cell complex of the realization. A cell of dimension m is a
// path of degree <= (1,...,1) with m nonzero coordinates; its two faces in
// direction i (a color with d_i = 1) are the front cube lambda(0, d - e_i)
// and the back cube lambda(e_i, d).
struct CellComplex {
  int rank = 0;
  // cells[m] = ids of the m-cells, sorted.
  std::vector<std::vector<std::string>> cells;
  struct FacePair {
    std::string front, back;
  };
  // faces[id][color] = the two codimension-1 faces of cell `id`.
  std::map<std::string, std::map<int, FacePair>> faces;
  // dims[id] = dimension of the cell.
  std::map<std::string, int> dims;
};

CellComplex buildComplex(const KGraph& g);

// V - E + F - ... over all cells.
long long eulerCharacteristic(const CellComplex& c);

struct SurfaceCheck {
  bool closedSurface = false;
  std::string reason;  // empty when closedSurface
};

// For rank-2 complexes: is every 1-cell on exactly two square corners and
// every vertex link a single cycle?
SurfaceCheck isClosedSurface(const KGraph& g);

struct SurfaceType {
  enum Kind { Sphere, Torus, NonOrientable, NotAClosedSurface };
  Kind kind = NotAClosedSurface;
  int genus = 0;  // meaningful for Torus / NonOrientable
  long long euler = 0;
  std::string toString() const;
};

SurfaceType classifySurface(const KGraph& g);

std::string complexToJson(const CellComplex& c);
CellComplex complexFromJson(const std::string& text);

}  // namespace kgr
