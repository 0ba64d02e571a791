#include "kgr/io.hpp"

#include <fstream>
#include <sstream>

namespace kgr {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  size_t b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::pair<int, std::string>> logicalLines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (!line.empty()) out.push_back({no, line});
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw KgError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

KGraph parseKGraph(const std::string& text) {
  auto lines = logicalLines(text);
  std::optional<KGraph> g;
  for (auto& [no, line] : lines) {
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "rank") {
      int k = 0;
      if (!(ss >> k) || k < 1) fail(no, "rank needs a positive integer");
      if (g) fail(no, "duplicate rank line");
      g.emplace(k);
    } else if (!g) {
      fail(no, "rank must come first");
    } else if (head == "vertex") {
      std::string name;
      if (!(ss >> name)) fail(no, "vertex needs a name");
      try {
        g->addVertex(name);
      } catch (const KgError& e) {
        fail(no, e.what());
      }
    } else if (head == "edge") {
      // edge NAME color=I : RANGE <- SOURCE
      std::string name, colorTok, colon, range, arrow, source;
      if (!(ss >> name >> colorTok >> colon >> range >> arrow >> source) ||
          colon != ":" || arrow != "<-" || colorTok.rfind("color=", 0) != 0)
        fail(no, "expected: edge NAME color=I : RANGE <- SOURCE");
      int color = 0;
      try {
        color = std::stoi(colorTok.substr(6));
      } catch (...) {
        fail(no, "bad color");
      }
      try {
        g->addEdge(name, color, range, source);
      } catch (const KgError& e) {
        fail(no, e.what());
      }
    } else if (head == "square") {
      // square E F = G H
      std::string e, f, eq, gg, h, extra;
      if (!(ss >> e >> f >> eq >> gg >> h) || eq != "=" || (ss >> extra))
        fail(no, "expected: square E F = G H");
      try {
        g->addSquare(e, f, gg, h);
      } catch (const KgError& err) {
        fail(no, err.what());
      }
    } else {
      fail(no, "unknown directive " + head);
    }
  }
  if (!g) throw KgError("missing rank line");
  return *g;
}

std::string printKGraph(const KGraph& g) {
  std::ostringstream os;
  os << "rank " << g.rank() << "\n";
  for (int v = 0; v < g.numVertices(); ++v)
    os << "vertex " << g.vertexName(v) << "\n";
  for (int e = 0; e < g.numEdges(); ++e) {
    const Edge& ed = g.edge(e);
    os << "edge " << ed.name << " color=" << ed.color << " : "
       << g.vertexName(ed.range) << " <- " << g.vertexName(ed.source) << "\n";
  }
  for (const Square& q : g.squares())
    os << "square " << g.edge(q.e).name << " " << g.edge(q.f).name << " = "
       << g.edge(q.g).name << " " << g.edge(q.h).name << "\n";
  return os.str();
}

FiniteGroup parseGroup(const std::string& text) {
  auto lines = logicalLines(text);
  if (lines.empty()) throw KgError("empty group file");
  auto& [no, first] = lines[0];
  std::istringstream ss(first);
  std::string head;
  int n = 0;
  ss >> head >> n;
  if (head != "order:" || n < 1) fail(no, "expected: order: N");
  if (static_cast<int>(lines.size()) != n + 1)
    fail(no, "expected " + std::to_string(n) + " table rows");
  std::vector<std::vector<int>> table;
  for (int i = 1; i <= n; ++i) {
    std::istringstream row(lines[i].second);
    std::vector<int> r;
    int x;
    while (row >> x) r.push_back(x);
    if (static_cast<int>(r.size()) != n)
      fail(lines[i].first, "expected " + std::to_string(n) + " entries");
    table.push_back(r);
  }
  return FiniteGroup::fromTable(table);
}

std::string printGroup(const FiniteGroup& g) {
  std::ostringstream os;
  os << "order: " << g.order << "\n";
  for (const auto& row : g.mul) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  return os.str();
}

GroupLabeling parseLabels(const std::string& text, const KGraph& base,
                          const FiniteGroup& group) {
  GroupLabeling l;
  l.base = &base;
  l.group = group;
  l.label.assign(base.numEdges(), -1);
  for (auto& [no, line] : logicalLines(text)) {
    // label EDGE = gI
    std::istringstream ss(line);
    std::string head, edge, eq, elt;
    if (!(ss >> head >> edge >> eq >> elt) || head != "label" || eq != "=" ||
        elt.empty() || elt[0] != 'g')
      fail(no, "expected: label EDGE = gI");
    auto e = base.edgeIndex(edge);
    if (!e) fail(no, "unknown edge " + edge);
    int x = -1;
    try {
      x = std::stoi(elt.substr(1));
    } catch (...) {
      fail(no, "bad group element " + elt);
    }
    if (x < 0 || x >= group.order) fail(no, "group element out of range");
    l.label[*e] = x;
  }
  for (int e = 0; e < base.numEdges(); ++e)
    if (l.label[e] < 0)
      throw KgError("edge " + base.edge(e).name + " has no label");
  return l;
}

GraphMorphism parseMorphism(const std::string& text, const KGraph& dom,
                            const KGraph& cod) {
  GraphMorphism m;
  m.vmap.assign(dom.numVertices(), -1);
  m.emap.assign(dom.numEdges(), -1);
  for (auto& [no, line] : logicalLines(text)) {
    std::istringstream ss(line);
    std::string head, from, to;
    if (!(ss >> head >> from >> to)) fail(no, "expected: vertex|edge FROM TO");
    if (head == "vertex") {
      auto a = dom.vertexIndex(from);
      auto b = cod.vertexIndex(to);
      if (!a || !b) fail(no, "unknown vertex");
      m.vmap[*a] = *b;
    } else if (head == "edge") {
      auto a = dom.edgeIndex(from);
      auto b = cod.edgeIndex(to);
      if (!a || !b) fail(no, "unknown edge");
      m.emap[*a] = *b;
    } else {
      fail(no, "expected vertex or edge line");
    }
  }
  for (int v = 0; v < dom.numVertices(); ++v)
    if (m.vmap[v] < 0)
      throw KgError("vertex " + dom.vertexName(v) + " has no image");
  for (int e = 0; e < dom.numEdges(); ++e)
    if (m.emap[e] < 0)
      throw KgError("edge " + dom.edge(e).name + " has no image");
  return m;
}

AutomorphismAction parseAction(const std::string& text, const KGraph& base) {
  AutomorphismAction a;
  a.base = &base;
  std::vector<std::pair<int, GraphMorphism>> gens;  // (index, map)
  for (auto& [no, line] : logicalLines(text)) {
    // alphaJ: a->b, c->d, ...
    auto colon = line.find(':');
    if (colon == std::string::npos || line.rfind("alpha", 0) != 0)
      fail(no, "expected: alphaJ: a->b, ...");
    int j = -1;
    try {
      j = std::stoi(line.substr(5, colon - 5));
    } catch (...) {
      fail(no, "bad generator index");
    }
    if (j < 1) fail(no, "generator index must be >= 1");
    GraphMorphism m = identityMorphism(base);
    std::stringstream rest(line.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      auto arrow = item.find("->");
      if (arrow == std::string::npos) fail(no, "expected a->b in " + item);
      std::string from = trim(item.substr(0, arrow));
      std::string to = trim(item.substr(arrow + 2));
      if (auto v = base.vertexIndex(from)) {
        auto w = base.vertexIndex(to);
        if (!w) fail(no, "unknown vertex " + to);
        m.vmap[*v] = *w;
      } else if (auto e = base.edgeIndex(from)) {
        auto f = base.edgeIndex(to);
        if (!f) fail(no, "unknown edge " + to);
        m.emap[*e] = *f;
      } else {
        fail(no, "unknown name " + from);
      }
    }
    gens.push_back({j, std::move(m)});
  }
  std::sort(gens.begin(), gens.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].first != static_cast<int>(i) + 1)
      throw KgError("action generators must be alpha1..alphaL");
    a.gens.push_back(std::move(gens[i].second));
  }
  return a;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KgError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw KgError("cannot write " + path);
  out << text;
}

}  // namespace kgr
