#include "kgr/kgraph.hpp"

#include <algorithm>
#include <sstream>

namespace kgr {

Degree degZero(int k) { return Degree(k, 0); }
Degree degOnes(int k) { return Degree(k, 1); }

Degree degUnit(int k, int color) {
  Degree d(k, 0);
  d[color - 1] = 1;
  return d;
}

bool degLe(const Degree& a, const Degree& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Degree degAdd(const Degree& a, const Degree& b) {
  Degree r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Degree degSub(const Degree& a, const Degree& b) {
  Degree r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Degree degJoin(const Degree& a, const Degree& b) {
  Degree r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

int degTotal(const Degree& a) {
  int t = 0;
  for (int x : a) t += x;
  return t;
}

std::string degToString(const Degree& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

std::string ValidationReport::summary() const {
  if (ok) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) os << v.kind << ": " << v.detail << "\n";
  return os.str();
}

namespace {
std::uint64_t pairKey(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}
}  // namespace

KGraph::KGraph(int rank) : rank_(rank) {
  if (rank < 1) throw KgError("rank must be >= 1");
}

int KGraph::addVertex(const std::string& name) {
  if (vindex_.count(name)) throw KgError("duplicate vertex name: " + name);
  int id = numVertices();
  vertices_.push_back(name);
  vindex_[name] = id;
  validated_ = false;
  return id;
}

int KGraph::addEdge(const std::string& name, int color, int range, int source) {
  if (eindex_.count(name)) throw KgError("duplicate edge name: " + name);
  if (color < 1 || color > rank_)
    throw KgError("edge " + name + ": color out of range");
  if (range < 0 || range >= numVertices() || source < 0 ||
      source >= numVertices())
    throw KgError("edge " + name + ": endpoint not a vertex");
  int id = numEdges();
  edges_.push_back(Edge{name, color, range, source});
  eindex_[name] = id;
  validated_ = false;
  return id;
}

int KGraph::addEdge(const std::string& name, int color,
                    const std::string& range, const std::string& source) {
  auto r = vertexIndex(range);
  auto s = vertexIndex(source);
  if (!r) throw KgError("edge " + name + ": unknown vertex " + range);
  if (!s) throw KgError("edge " + name + ": unknown vertex " + source);
  return addEdge(name, color, *r, *s);
}

void KGraph::addSquare(int e, int f, int g, int h) {
  for (int x : {e, f, g, h})
    if (x < 0 || x >= numEdges()) throw KgError("square references bad edge");
  squares_.push_back(Square{e, f, g, h});
  validated_ = false;
}

void KGraph::addSquare(const std::string& e, const std::string& f,
                       const std::string& g, const std::string& h) {
  auto need = [&](const std::string& n) {
    auto i = edgeIndex(n);
    if (!i) throw KgError("square references unknown edge " + n);
    return *i;
  };
  addSquare(need(e), need(f), need(g), need(h));
}

std::optional<int> KGraph::vertexIndex(const std::string& name) const {
  auto it = vindex_.find(name);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> KGraph::edgeIndex(const std::string& name) const {
  auto it = eindex_.find(name);
  if (it == eindex_.end()) return std::nullopt;
  return it->second;
}

void KGraph::requireValidated() const {
  if (!validated_) throw KgError("k-graph has not been validated");
}

std::optional<std::pair<int, int>> KGraph::swapPair(int a, int b) const {
  auto it = swap_.find(pairKey(a, b));
  if (it == swap_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& KGraph::edgesOutOf(int v, int color) const {
  return out_[color - 1][v];
}

const std::vector<int>& KGraph::edgesInto(int v, int color) const {
  return in_[color - 1][v];
}

void KGraph::buildIncidence() {
  out_.assign(rank_, std::vector<std::vector<int>>(numVertices()));
  in_.assign(rank_, std::vector<std::vector<int>>(numVertices()));
  for (int e = 0; e < numEdges(); ++e) {
    out_[edges_[e].color - 1][edges_[e].range].push_back(e);
    in_[edges_[e].color - 1][edges_[e].source].push_back(e);
  }
}

ValidationReport KGraph::validate() {
  ValidationReport rep;
  swap_.clear();
  validated_ = false;
  buildIncidence();

  auto bad = [&](const std::string& kind, const std::string& detail) {
    rep.violations.push_back(Violation{kind, detail});
  };

  // Structural checks on each stored square.
  for (size_t i = 0; i < squares_.size(); ++i) {
    const Square& q = squares_[i];
    const Edge &E = edges_[q.e], &F = edges_[q.f], &G = edges_[q.g],
               &H = edges_[q.h];
    std::string tag = E.name + " " + F.name + " = " + G.name + " " + H.name;
    if (E.color == F.color || E.color != H.color || F.color != G.color) {
      bad("EndpointMismatch", "square " + tag + ": color pattern invalid");
      continue;
    }
    if (E.source != F.range || G.source != H.range || E.range != G.range ||
        F.source != H.source) {
      bad("EndpointMismatch", "square " + tag + ": endpoints do not match");
      continue;
    }
    for (auto [a, b, c, d] : {std::array<int, 4>{q.e, q.f, q.g, q.h},
                              std::array<int, 4>{q.g, q.h, q.e, q.f}}) {
      auto key = pairKey(a, b);
      auto it = swap_.find(key);
      if (it != swap_.end() && it->second != std::make_pair(c, d)) {
        bad("DuplicateSquare",
            "pair " + edges_[a].name + " " + edges_[b].name +
                " has two distinct factorizations");
      } else if (it != swap_.end()) {
        bad("DuplicateSquare", "square " + tag + " stored twice");
      } else {
        swap_[key] = {c, d};
      }
    }
  }

  // Completeness: every composable bicolored pair must appear exactly once.
  for (int a = 0; a < numEdges(); ++a) {
    for (int b = 0; b < numEdges(); ++b) {
      if (edges_[a].color == edges_[b].color) continue;
      if (edges_[a].source != edges_[b].range) continue;
      if (!swap_.count(pairKey(a, b)))
        bad("MissingSquare",
            "no square factors " + edges_[a].name + " " + edges_[b].name);
    }
  }

  // Rank >= 3: the two hexagon routes on every composable tricolored triple
  // must agree edge-by-edge.
  if (rank_ >= 3 && rep.violations.empty()) {
    auto applySwap = [&](std::array<int, 3>& t, int pos) {
      auto sw = swap_.at(pairKey(t[pos], t[pos + 1]));
      t[pos] = sw.first;
      t[pos + 1] = sw.second;
    };
    for (int a = 0; a < numEdges(); ++a) {
      for (int b = 0; b < numEdges(); ++b) {
        if (edges_[a].source != edges_[b].range) continue;
        if (edges_[b].color == edges_[a].color) continue;
        for (int c = 0; c < numEdges(); ++c) {
          if (edges_[b].source != edges_[c].range) continue;
          if (edges_[c].color == edges_[a].color ||
              edges_[c].color == edges_[b].color)
            continue;
          std::array<int, 3> ra{a, b, c}, rb{a, b, c};
          applySwap(ra, 0);
          applySwap(ra, 1);
          applySwap(ra, 0);
          applySwap(rb, 1);
          applySwap(rb, 0);
          applySwap(rb, 1);
          if (ra != rb)
            bad("HexagonInconsistent",
                "triple " + edges_[a].name + " " + edges_[b].name + " " +
                    edges_[c].name);
        }
      }
    }
  }

  rep.ok = rep.violations.empty();
  validated_ = rep.ok;
  if (!rep.ok) swap_.clear();
  return rep;
}

}  // namespace kgr
