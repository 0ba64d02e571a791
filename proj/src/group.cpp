#include "kgr/group.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace kgr {

using boost::multiprecision::cpp_int;

Word wordInverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

Word freeReduce(const Word& w) {
  Word r;
  for (int x : w) {
    if (!r.empty() && r.back() == -x)
      r.pop_back();
    else
      r.push_back(x);
  }
  return r;
}

Word cyclicReduce(const Word& w) {
  Word r = freeReduce(w);
  while (r.size() >= 2 && r.front() == -r.back()) {
    r.erase(r.begin());
    r.pop_back();
  }
  return r;
}

TreeData spanningTree(const KGraph& g, int base) {
  if (base < 0 || base >= g.numVertices()) throw KgError("unknown vertex");
  int nv = g.numVertices();
  TreeData t;
  t.base = base;
  t.parentEdge.assign(nv, -1);
  t.parentSign.assign(nv, 0);
  t.isTreeEdge.assign(g.numEdges(), false);
  t.kappa.assign(nv, {});

  // Undirected adjacency, neighbors in ascending edge id for determinism.
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge, sign)
  for (int e = 0; e < g.numEdges(); ++e) {
    adj[g.edge(e).source].push_back({e, +1});  // walk s -> r via +e
    adj[g.edge(e).range].push_back({e, -1});   // walk r -> s via -e
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<bool> seen(nv, false);
  seen[base] = true;
  std::deque<int> queue{base};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [e, sign] : adj[v]) {
      int w = sign > 0 ? g.edge(e).range : g.edge(e).source;
      if (seen[w]) continue;
      seen[w] = true;
      t.parentEdge[w] = e;
      t.parentSign[w] = sign;
      t.isTreeEdge[e] = true;
      // kappa[w] has range w and source base
      t.kappa[w] = t.kappa[v];
      t.kappa[w].insert(t.kappa[w].begin(), sign * (e + 1));
      queue.push_back(w);
    }
  }
  for (int v = 0; v < nv; ++v)
    if (!seen[v])
      throw KgError("Disconnected: vertex " + g.vertexName(v) +
                    " is not reachable from " + g.vertexName(base));
  return t;
}

Pi1Data pi1Presentation(const KGraph& g, int base) {
  g.requireValidated();
  Pi1Data out;
  out.tree = spanningTree(g, base);
  out.genOfEdge.assign(g.numEdges(), -1);
  for (int e = 0; e < g.numEdges(); ++e) {
    if (out.tree.isTreeEdge[e]) continue;
    out.genOfEdge[e] = static_cast<int>(out.pres.gens.size());
    out.pres.gens.push_back(g.edge(e).name);
  }
  for (const Square& q : g.squares()) {
    Word w;
    for (int letter : {q.e + 1, q.f + 1, -(q.h + 1), -(q.g + 1)}) {
      int e = std::abs(letter) - 1;
      int gidx = out.genOfEdge[e];
      if (gidx < 0) continue;
      w.push_back(letter > 0 ? gidx + 1 : -(gidx + 1));
    }
    out.pres.relators.push_back(freeReduce(w));
  }
  return out;
}

namespace {

// Smith normal form of M in place; returns the nonzero diagonal entries
// (positive, divisibility chain).
std::vector<cpp_int> smithDiagonal(std::vector<std::vector<cpp_int>> M) {
  size_t rows = M.size();
  size_t cols = rows ? M[0].size() : 0;
  std::vector<cpp_int> diag;
  size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot of minimal absolute value
    size_t pi = t, pj = t;
    cpp_int best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        cpp_int a = abs(M[i][j]);
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    std::swap(M[t], M[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(M[i][t], M[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (M[i][t] == 0) continue;
        cpp_int q = M[i][t] / M[t][t];
        for (size_t j = t; j < cols; ++j) M[i][j] -= q * M[t][j];
        if (M[i][t] != 0) {
          std::swap(M[t], M[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (M[t][j] == 0) continue;
        cpp_int q = M[t][j] / M[t][t];
        for (size_t i = t; i < rows; ++i) M[i][j] -= q * M[i][t];
        if (M[t][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(M[i][t], M[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility fix: pivot must divide everything below-right
        for (size_t i = t + 1; i < rows && clean; ++i)
          for (size_t j = t + 1; j < cols && clean; ++j)
            if (M[i][j] % M[t][t] != 0) {
              for (size_t c = t; c < cols; ++c) M[t][c] += M[i][c];
              clean = false;
            }
      }
    }
    diag.push_back(abs(M[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace

std::string AbelianInvariants::toString() const {
  std::ostringstream os;
  os << "(" << rank << ", [";
  for (size_t i = 0; i < torsion.size(); ++i) {
    if (i) os << ",";
    os << torsion[i];
  }
  os << "])";
  return os.str();
}

AbelianInvariants abelianize(const GroupPresentation& p) {
  size_t ng = p.gens.size();
  std::vector<std::vector<cpp_int>> M;
  for (const Word& w : p.relators) {
    std::vector<cpp_int> row(ng, 0);
    for (int x : w) row[std::abs(x) - 1] += (x > 0 ? 1 : -1);
    M.push_back(std::move(row));
  }
  std::vector<cpp_int> diag = M.empty() ? std::vector<cpp_int>{}
                                        : smithDiagonal(std::move(M));
  AbelianInvariants inv;
  int nonzero = 0;
  for (const cpp_int& d : diag)
    if (d != 0) {
      ++nonzero;
      if (d > 1) inv.torsion.push_back(d.convert_to<long long>());
    }
  inv.rank = static_cast<int>(ng) - nonzero;
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

namespace {

// Canonical form of a relator up to rotation and inversion, for dedup.
Word cyclicCanonical(const Word& w) {
  if (w.empty()) return w;
  Word best;
  for (const Word& base : {w, wordInverse(w)}) {
    for (size_t r = 0; r < base.size(); ++r) {
      Word rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

// Substitutes generator gen (1-based) by `image` in w, then renumbers
// generators above `gen` down by one.
Word substitute(const Word& w, int gen, const Word& image) {
  Word out;
  for (int x : w) {
    int a = std::abs(x);
    if (a == gen) {
      Word piece = x > 0 ? image : wordInverse(image);
      out.insert(out.end(), piece.begin(), piece.end());
    } else {
      out.push_back(x);
    }
  }
  for (int& x : out) {
    int a = std::abs(x);
    if (a > gen) x = x > 0 ? x - 1 : x + 1;
  }
  return freeReduce(out);
}

// Replaces, in cyclic word s, one occurrence of a subword of r (or r^-1)
// longer than half of r by the inverse of the complement. Returns true on
// change.
bool subsume(Word& s, const Word& r) {
  if (r.size() < 2 || s.size() < r.size() / 2 + 1) return false;
  for (const Word& base : {r, wordInverse(r)}) {
    size_t n = base.size();
    size_t half = n / 2 + 1;
    for (size_t rot = 0; rot < n; ++rot) {
      Word piece;
      for (size_t i = 0; i < half; ++i) piece.push_back(base[(rot + i) % n]);
      // search piece in s (non-cyclically; cyclic handled by caller rotating)
      if (piece.size() > s.size()) continue;
      for (size_t at = 0; at + piece.size() <= s.size(); ++at) {
        if (!std::equal(piece.begin(), piece.end(), s.begin() + at)) continue;
        // complement: base with `piece` removed, inverted
        Word rest;
        for (size_t i = half; i < n; ++i) rest.push_back(base[(rot + i) % n]);
        Word repl = wordInverse(rest);
        if (repl.size() >= piece.size()) continue;
        Word ns(s.begin(), s.begin() + at);
        ns.insert(ns.end(), repl.begin(), repl.end());
        ns.insert(ns.end(), s.begin() + at + piece.size(), s.end());
        s = freeReduce(ns);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

GroupPresentation tietzeSimplify(const GroupPresentation& p, int budget) {
  GroupPresentation q = p;
  for (int pass = 0; pass < budget; ++pass) {
    bool changed = false;

    for (Word& w : q.relators) {
      Word red = cyclicReduce(w);
      if (red != w) {
        w = red;
        changed = true;
      }
    }
    // drop empties and duplicates (up to rotation/inversion)
    {
      std::set<Word> seen;
      std::vector<Word> kept;
      for (const Word& w : q.relators) {
        if (w.empty()) {
          changed = true;
          continue;
        }
        if (!seen.insert(cyclicCanonical(w)).second) {
          changed = true;
          continue;
        }
        kept.push_back(w);
      }
      q.relators = std::move(kept);
    }

    // subsumption: shorten long relators with shorter ones
    {
      std::vector<size_t> order(q.relators.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return q.relators[a].size() < q.relators[b].size();
      });
      for (size_t a : order)
        for (size_t b : order) {
          if (a == b) continue;
          if (q.relators[b].size() >= q.relators[a].size()) continue;
          if (subsume(q.relators[a], q.relators[b])) changed = true;
        }
    }

    // eliminate a generator occurring exactly once in some relator
    {
      int elimGen = 0;
      size_t elimRel = 0;
      Word image;
      for (size_t ri = 0; ri < q.relators.size() && elimGen == 0; ++ri) {
        const Word& w = q.relators[ri];
        for (size_t i = 0; i < w.size(); ++i) {
          int g = std::abs(w[i]);
          int count = 0;
          for (int x : w)
            if (std::abs(x) == g) ++count;
          if (count != 1) continue;
          // rotate so +-g is first: g = inverse of the rest (sign-adjusted)
          Word rot(w.begin() + i, w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + i);
          Word rest(rot.begin() + 1, rot.end());
          image = rot[0] > 0 ? wordInverse(rest) : rest;
          elimGen = g;
          elimRel = ri;
          break;
        }
      }
      if (elimGen != 0) {
        GroupPresentation next;
        for (size_t gi = 0; gi < q.gens.size(); ++gi)
          if (static_cast<int>(gi) + 1 != elimGen)
            next.gens.push_back(q.gens[gi]);
        for (size_t ri = 0; ri < q.relators.size(); ++ri) {
          if (ri == elimRel) continue;
          next.relators.push_back(substitute(q.relators[ri], elimGen, image));
        }
        q = std::move(next);
        changed = true;
      }
    }

    if (!changed) break;
  }
  return q;
}

namespace {

struct CosetTable {
  int cols;
  long long maxCosets;
  std::vector<std::vector<int>> tab;
  std::vector<int> parent;  // union-find, parent[c] <= c
  long long live = 0;
  bool exceeded = false;
  std::deque<int> merges;

  explicit CosetTable(int nGens, long long bound)
      : cols(2 * nGens), maxCosets(bound) {
    newCoset();
  }

  int newCoset() {
    if (static_cast<long long>(tab.size()) >= maxCosets) {
      exceeded = true;
      return -1;
    }
    tab.push_back(std::vector<int>(cols, -1));
    parent.push_back(static_cast<int>(tab.size()) - 1);
    ++live;
    return static_cast<int>(tab.size()) - 1;
  }

  int rep(int c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  }

  static int col(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
  static int invCol(int c) { return c ^ 1; }

  void join(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    --live;
    merges.push_back(b);
  }

  void coincidence(int a, int b) {
    join(a, b);
    while (!merges.empty()) {
      int dead = merges.front();
      merges.pop_front();
      for (int x = 0; x < cols; ++x) {
        int f = tab[dead][x];
        if (f < 0) continue;
        tab[dead][x] = -1;
        if (tab[f][invCol(x)] == dead) tab[f][invCol(x)] = -1;
        int e1 = rep(dead), f1 = rep(f);
        if (tab[e1][x] >= 0)
          join(f1, tab[e1][x]);
        else if (tab[f1][invCol(x)] >= 0)
          join(e1, tab[f1][invCol(x)]);
        else {
          tab[e1][x] = f1;
          tab[f1][invCol(x)] = e1;
        }
      }
    }
  }

  void scanAndFill(int a, const Word& w) {
    a = rep(a);
    int f = a, b = a;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && tab[f][col(w[i])] >= 0) f = rep(tab[f][col(w[i++])]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab[b][invCol(col(w[j]))] >= 0)
        b = rep(tab[b][invCol(col(w[j--]))]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        tab[f][col(w[i])] = b;
        tab[b][invCol(col(w[i]))] = f;
        return;
      }
      int c = newCoset();
      if (c < 0) return;
      tab[f][col(w[i])] = c;
      tab[c][invCol(col(w[i]))] = f;
      f = c;
      ++i;
    }
  }
};

}  // namespace

CosetResult cosetEnumerate(const GroupPresentation& p, long long maxCosets) {
  if (maxCosets < 1) throw KgError("maxCosets must be >= 1");
  CosetResult res;
  int n = static_cast<int>(p.gens.size());
  if (n == 0) {
    res.finite = true;
    res.order = 1;
    res.table = {{}};
    return res;
  }
  std::vector<Word> rels;
  for (const Word& w : p.relators) {
    Word r = freeReduce(w);
    if (!r.empty()) rels.push_back(r);
  }
  CosetTable ct(n, maxCosets);
  bool complete = false;
  while (!complete) {
    for (int a = 0; a < static_cast<int>(ct.tab.size()); ++a) {
      if (ct.rep(a) != a) continue;
      for (const Word& w : rels) {
        ct.scanAndFill(a, w);
        if (ct.exceeded) return res;
        if (ct.rep(a) != a) break;
      }
      if (ct.rep(a) != a) continue;
      for (int x = 0; x < ct.cols; ++x) {
        if (ct.tab[a][x] >= 0) continue;
        int c = ct.newCoset();
        if (c < 0) return res;
        ct.tab[a][x] = c;
        ct.tab[c][CosetTable::invCol(x)] = a;
      }
    }
    // coincidences may have punched holes in rows processed earlier
    complete = true;
    for (int a = 0; a < static_cast<int>(ct.tab.size()) && complete; ++a) {
      if (ct.rep(a) != a) continue;
      for (int x = 0; x < ct.cols; ++x)
        if (ct.tab[a][x] < 0) {
          complete = false;
          break;
        }
    }
  }
  // compress live cosets
  std::vector<int> index(ct.tab.size(), -1);
  int next = 0;
  for (int c = 0; c < static_cast<int>(ct.tab.size()); ++c)
    if (ct.rep(c) == c) index[c] = next++;
  res.finite = true;
  res.order = ct.live;
  res.table.assign(next, std::vector<int>(ct.cols, -1));
  for (int c = 0; c < static_cast<int>(ct.tab.size()); ++c) {
    if (ct.rep(c) != c) continue;
    for (int x = 0; x < ct.cols; ++x)
      res.table[index[c]][x] = index[ct.rep(ct.tab[c][x])];
  }
  return res;
}

int traceWord(const CosetResult& r, int from, const Word& w) {
  int c = from;
  for (int letter : w) c = r.table[c][CosetTable::col(letter)];
  return c;
}

PresentationHom inducedHom(const KGraph& dom, const KGraph& cod,
                           const GraphMorphism& m, int base) {
  ValidationReport rep = validateMorphism(dom, cod, m);
  if (!rep.ok) throw KgError("NotAMorphism: " + rep.summary());
  Pi1Data pd = pi1Presentation(dom, base);
  Pi1Data pc = pi1Presentation(cod, m.vmap[base]);

  // collapse a word of codomain edge letters into codomain generators
  auto collapse = [&](const Word& edgeWord) {
    Word w;
    for (int x : edgeWord) {
      int gidx = pc.genOfEdge[std::abs(x) - 1];
      if (gidx < 0) continue;
      w.push_back(x > 0 ? gidx + 1 : -(gidx + 1));
    }
    return freeReduce(w);
  };
  auto mapEdges = [&](const Word& edgeWord) {
    Word w;
    for (int x : edgeWord) {
      int img = m.emap[std::abs(x) - 1];
      w.push_back(x > 0 ? img + 1 : -(img + 1));
    }
    return w;
  };

  PresentationHom hom;
  hom.domain = pd.pres;
  hom.codomain = pc.pres;
  for (int e = 0; e < dom.numEdges(); ++e) {
    if (pd.genOfEdge[e] < 0) continue;
    // loop class of edge e is kappa_{r(e)}^-1 * e * kappa_{s(e)}
    Word w = wordInverse(mapEdges(pd.tree.kappa[dom.edge(e).range]));
    w.push_back(m.emap[e] + 1);
    Word tail = mapEdges(pd.tree.kappa[dom.edge(e).source]);
    w.insert(w.end(), tail.begin(), tail.end());
    hom.images.push_back(collapse(w));
  }

  // images of domain relators must die in the codomain group
  auto imageWord = [&](const Word& rel) {
    Word w;
    for (int x : rel) {
      const Word& img = hom.images[std::abs(x) - 1];
      Word piece = x > 0 ? img : wordInverse(img);
      w.insert(w.end(), piece.begin(), piece.end());
    }
    return freeReduce(w);
  };
  CosetResult cr = cosetEnumerate(pc.pres, 100000);
  bool allOk = true;
  if (cr.finite) {
    for (const Word& rel : pd.pres.relators)
      if (traceWord(cr, 0, imageWord(rel)) != 0) allOk = false;
  } else {
    // bounded fallback: adjoining the image relator must not change H1
    AbelianInvariants basei = abelianize(pc.pres);
    for (const Word& rel : pd.pres.relators) {
      GroupPresentation ext = pc.pres;
      ext.relators.push_back(imageWord(rel));
      if (!(abelianize(ext) == basei)) allOk = false;
    }
  }
  if (!allOk)
    throw KgError("NotAMorphism: a relator is not sent to a consequence");
  hom.relatorsChecked = true;
  return hom;
}

std::string presentationToText(const GroupPresentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (size_t i = 0; i < p.gens.size(); ++i)
    os << (i ? ", " : " ") << p.gens[i];
  os << "\n";
  for (const Word& w : p.relators) {
    os << "rel:";
    for (int x : w) {
      std::string name = p.gens[std::abs(x) - 1];
      if (x < 0) name[0] = static_cast<char>(std::toupper(name[0]));
      os << " " << name;
    }
    os << "\n";
  }
  return os.str();
}

GroupPresentation presentationFromText(const std::string& text) {
  GroupPresentation p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("gens:", 0) == 0) {
      std::stringstream ss(line.substr(5));
      std::string name;
      while (std::getline(ss, name, ',')) {
        name = trim(name);
        if (!name.empty()) p.gens.push_back(name);
      }
    } else if (line.rfind("rel:", 0) == 0) {
      Word w;
      std::istringstream ss(line.substr(4));
      std::string tok;
      while (ss >> tok) {
        int letter = 0;
        for (size_t i = 0; i < p.gens.size(); ++i) {
          if (tok == p.gens[i]) {
            letter = static_cast<int>(i) + 1;
            break;
          }
          std::string up = p.gens[i];
          up[0] = static_cast<char>(std::toupper(up[0]));
          if (tok == up && up != p.gens[i]) {
            letter = -(static_cast<int>(i) + 1);
            break;
          }
        }
        if (letter == 0)
          throw KgError("line " + std::to_string(lineno) +
                        ": unknown generator " + tok);
        w.push_back(letter);
      }
      p.relators.push_back(w);
    } else {
      throw KgError("line " + std::to_string(lineno) +
                    ": expected gens: or rel:");
    }
  }
  return p;
}

}  // namespace kgr
