#include "kgr/cell_complex.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace kgr {

namespace {

// All degree vectors m <= 1_k, grouped by |m|.
std::vector<Degree> cubeDegrees(int k) {
  std::vector<Degree> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    Degree d(k, 0);
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) d[i] = 1;
    out.push_back(d);
  }
  return out;
}

}  // namespace

CellComplex buildComplex(const KGraph& g) {
  g.requireValidated();
  CellComplex c;
  c.rank = g.rank();
  c.cells.assign(g.rank() + 1, {});
  for (const Degree& m : cubeDegrees(g.rank())) {
    int dim = degTotal(m);
    for (const Path& p : enumeratePaths(g, m)) {
      std::string id = pathId(g, p);
      c.cells[dim].push_back(id);
      c.dims[id] = dim;
      for (int i = 1; i <= g.rank(); ++i) {
        if (m[i - 1] != 1) continue;
        Degree ei = degUnit(g.rank(), i);
        Path front = segment(g, p, degZero(g.rank()), degSub(m, ei));
        Path back = segment(g, p, ei, m);
        c.faces[id][i] = CellComplex::FacePair{pathId(g, front),
                                               pathId(g, back)};
      }
    }
  }
  for (auto& dimCells : c.cells) std::sort(dimCells.begin(), dimCells.end());
  return c;
}

long long eulerCharacteristic(const CellComplex& c) {
  long long chi = 0;
  for (size_t r = 0; r < c.cells.size(); ++r) {
    long long n = static_cast<long long>(c.cells[r].size());
    chi += (r % 2 == 0) ? n : -n;
  }
  return chi;
}

namespace {

// Node id for an edge-end: 2*e for the range end, 2*e+1 for the source end.
struct Corners {
  // adjacency between edge-ends at each vertex
  std::vector<std::vector<int>> adj;  // indexed by edge-end node
  std::vector<int> endVertex;         // vertex each edge-end sits at
};

Corners buildCorners(const KGraph& g) {
  Corners c;
  c.adj.assign(2 * g.numEdges(), {});
  c.endVertex.assign(2 * g.numEdges(), -1);
  for (int e = 0; e < g.numEdges(); ++e) {
    c.endVertex[2 * e] = g.edge(e).range;
    c.endVertex[2 * e + 1] = g.edge(e).source;
  }
  auto link = [&](int a, int b) {
    c.adj[a].push_back(b);
    c.adj[b].push_back(a);
  };
  for (const Square& q : g.squares()) {
    link(2 * q.e, 2 * q.g);              // corner at r(e) = r(g)
    link(2 * q.e + 1, 2 * q.f);          // corner at s(e) = r(f)
    link(2 * q.g + 1, 2 * q.h);          // corner at s(g) = r(h)
    link(2 * q.f + 1, 2 * q.h + 1);      // corner at s(f) = s(h)
  }
  return c;
}

}  // namespace

SurfaceCheck isClosedSurface(const KGraph& g) {
  g.requireValidated();
  if (g.rank() != 2) return {false, "rank is not 2"};
  if (g.numVertices() == 0) return {false, "empty complex"};

  // Each edge must fill exactly two of the four slots over all squares.
  std::vector<int> slots(g.numEdges(), 0);
  for (const Square& q : g.squares()) {
    slots[q.e] += 1;
    slots[q.f] += 1;
    slots[q.g] += 1;
    slots[q.h] += 1;
  }
  for (int e = 0; e < g.numEdges(); ++e)
    if (slots[e] != 2)
      return {false, "edge " + g.edge(e).name + " lies on " +
                         std::to_string(slots[e]) + " square slots"};

  // Every vertex link must be one cycle: each edge-end in exactly two
  // corners, and the corner graph at the vertex connected.
  Corners c = buildCorners(g);
  for (size_t n = 0; n < c.adj.size(); ++n)
    if (c.adj[n].size() != 2)
      return {false, "edge end of " + g.edge(static_cast<int>(n / 2)).name +
                         " lies on " + std::to_string(c.adj[n].size()) +
                         " corners"};
  for (int v = 0; v < g.numVertices(); ++v) {
    std::vector<int> ends;
    for (size_t n = 0; n < c.adj.size(); ++n)
      if (c.endVertex[n] == v) ends.push_back(static_cast<int>(n));
    if (ends.empty())
      return {false, "isolated vertex " + g.vertexName(v)};
    std::set<int> seen{ends[0]};
    std::vector<int> stack{ends[0]};
    while (!stack.empty()) {
      int n = stack.back();
      stack.pop_back();
      for (int m : c.adj[n])
        if (seen.insert(m).second) stack.push_back(m);
    }
    if (seen.size() != ends.size())
      return {false, "link of vertex " + g.vertexName(v) +
                         " is not a single cycle"};
  }
  return {true, ""};
}

std::string SurfaceType::toString() const {
  switch (kind) {
    case Sphere:
      return "Sphere";
    case Torus:
      return "Torus genus " + std::to_string(genus);
    case NonOrientable:
      return "NonOrientable genus " + std::to_string(genus);
    default:
      return "NotAClosedSurface";
  }
}

SurfaceType classifySurface(const KGraph& g) {
  SurfaceType st;
  SurfaceCheck chk = isClosedSurface(g);
  if (!chk.closedSurface) {
    st.kind = SurfaceType::NotAClosedSurface;
    return st;
  }
  st.euler = eulerCharacteristic(buildComplex(g));

  // Orientation propagation. Square boundary is read e f h^-1 g^-1, so e and
  // f appear with sign +1 and g, h with sign -1. Two squares sharing an edge
  // are compatibly oriented when the edge's signs are opposite.
  int ns = g.numSquares();
  std::vector<std::vector<std::pair<int, int>>> uses(g.numEdges());
  for (int i = 0; i < ns; ++i) {
    const Square& q = g.squares()[i];
    uses[q.e].push_back({i, +1});
    uses[q.f].push_back({i, +1});
    uses[q.g].push_back({i, -1});
    uses[q.h].push_back({i, -1});
  }
  std::vector<int> orient(ns, 0);
  bool orientable = true;
  for (int start = 0; start < ns && orientable; ++start) {
    if (orient[start] != 0) continue;
    orient[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty() && orientable) {
      int i = stack.back();
      stack.pop_back();
      const Square& q = g.squares()[i];
      for (int e : {q.e, q.f, q.g, q.h}) {
        const auto& u = uses[e];  // exactly two uses on a closed surface
        if (u[0].first == u[1].first) {
          // edge used twice by one square: needs opposite signs
          if (u[0].second == u[1].second) orientable = false;
          continue;
        }
        auto [si, sj] = u[0].first == i
                            ? std::pair{u[0].second, u[1].second}
                            : std::pair{u[1].second, u[0].second};
        int j = u[0].first == i ? u[1].first : u[0].first;
        int needed = -si * sj * orient[i];
        if (orient[j] == 0) {
          orient[j] = needed;
          stack.push_back(j);
        } else if (orient[j] != needed) {
          orientable = false;
          break;
        }
      }
    }
  }

  if (orientable) {
    if (st.euler == 2) {
      st.kind = SurfaceType::Sphere;
    } else {
      st.kind = SurfaceType::Torus;
      st.genus = static_cast<int>((2 - st.euler) / 2);
    }
  } else {
    st.kind = SurfaceType::NonOrientable;
    st.genus = static_cast<int>(2 - st.euler);
  }
  return st;
}

std::string complexToJson(const CellComplex& c) {
  nlohmann::json j;
  j["rank"] = c.rank;
  j["cells"] = c.cells;
  nlohmann::json faces = nlohmann::json::object();
  for (const auto& [id, byColor] : c.faces) {
    nlohmann::json entry = nlohmann::json::object();
    for (const auto& [color, fp] : byColor)
      entry[std::to_string(color)] = {fp.front, fp.back};
    faces[id] = entry;
  }
  j["faces"] = faces;
  return j.dump(2);
}

CellComplex complexFromJson(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CellComplex c;
  c.rank = j.at("rank").get<int>();
  c.cells = j.at("cells").get<std::vector<std::vector<std::string>>>();
  for (size_t r = 0; r < c.cells.size(); ++r)
    for (const auto& id : c.cells[r]) c.dims[id] = static_cast<int>(r);
  for (const auto& [id, entry] : j.at("faces").items())
    for (const auto& [color, pair] : entry.items())
      c.faces[id][std::stoi(color)] =
          CellComplex::FacePair{pair.at(0).get<std::string>(),
                                pair.at(1).get<std::string>()};
  return c;
}

}  // namespace kgr
