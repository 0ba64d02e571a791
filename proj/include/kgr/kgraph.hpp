#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kgr {

// Element of the grading monoid N^k.
using Degree = std::vector<int>;

Degree degZero(int k);
Degree degOnes(int k);
Degree degUnit(int k, int color);  // color is 1-based
bool degLe(const Degree& a, const Degree& b);
Degree degAdd(const Degree& a, const Degree& b);
Degree degSub(const Degree& a, const Degree& b);
Degree degJoin(const Degree& a, const Degree& b);
int degTotal(const Degree& a);
std::string degToString(const Degree& a);

struct KgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  std::string name;
  int color;   // 1..k
  int range;   // vertex index, r(e)
  int source;  // vertex index, s(e)
};

// Commuting square e*f = g*h with color(e)==color(h), color(f)==color(g),
// s(e)=r(f), s(g)=r(h), r(e)=r(g), s(f)=s(h).
struct Square {
  int e, f, g, h;
};

struct Violation {
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
  std::string summary() const;
};

// A morphism of degree n in color-sorted normal form. edges[0] carries the
// range of the path and is the last edge traversed; a degree-0 path is a
// vertex with an empty edge list.
struct Path {
  Degree degree;
  int range = -1;
  int source = -1;
  std::vector<int> edges;
  bool operator==(const Path&) const = default;
};

// Finite presentation of a k-graph: colored multigraph skeleton plus the
// table of commuting squares. validate() certifies that the square table
// presents a unique k-graph (bijective swaps per color pair, and for rank
// >= 3 consistency of the two hexagon routes on tricolored triples).
class KGraph {
 public:
  explicit KGraph(int rank);

  int rank() const { return rank_; }
  int numVertices() const { return static_cast<int>(vertices_.size()); }
  int numEdges() const { return static_cast<int>(edges_.size()); }
  int numSquares() const { return static_cast<int>(squares_.size()); }

  int addVertex(const std::string& name);
  int addEdge(const std::string& name, int color, const std::string& range,
              const std::string& source);
  int addEdge(const std::string& name, int color, int range, int source);
  void addSquare(const std::string& e, const std::string& f,
                 const std::string& g, const std::string& h);
  void addSquare(int e, int f, int g, int h);

  const std::string& vertexName(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Square>& squares() const { return squares_; }
  std::optional<int> vertexIndex(const std::string& name) const;
  std::optional<int> edgeIndex(const std::string& name) const;

  ValidationReport validate();
  bool validated() const { return validated_; }
  void requireValidated() const;

  // The other factorization of the composable bicolored pair a*b.
  std::optional<std::pair<int, int>> swapPair(int a, int b) const;

  // Edges by color with the given range/source vertex.
  const std::vector<int>& edgesOutOf(int v, int color) const;  // r(e) == v
  const std::vector<int>& edgesInto(int v, int color) const;   // s(e) == v

 private:
  void buildIncidence();

  int rank_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Square> squares_;
  std::unordered_map<std::string, int> vindex_;
  std::unordered_map<std::string, int> eindex_;
  bool validated_ = false;
  std::unordered_map<std::uint64_t, std::pair<int, int>> swap_;
  // incidence_[color-1][v] = edges of that color with r == v (out) / s == v (in)
  std::vector<std::vector<std::vector<int>>> out_;
  std::vector<std::vector<std::vector<int>>> in_;
};

}  // namespace kgr
