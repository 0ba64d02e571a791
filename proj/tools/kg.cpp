#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "kgr/cell_complex.hpp"
#include "kgr/constructions.hpp"
#include "kgr/gallery.hpp"
#include "kgr/group.hpp"
#include "kgr/io.hpp"

using nlohmann::json;

namespace {

kgr::KGraph loadKGraph(const std::string& spec) {
  if (spec.rfind("gallery:", 0) == 0) return kgr::gallery(spec.substr(8));
  return kgr::parseKGraph(kgr::readFile(spec));
}

long long cosetBound(long long fallback) {
  if (const char* env = std::getenv("KGRAPH_MAX_COSETS")) {
    try {
      return std::stoll(env);
    } catch (...) {
      throw kgr::KgError("bad KGRAPH_MAX_COSETS value");
    }
  }
  return fallback;
}

json reportJson(const kgr::ValidationReport& rep) {
  json j;
  j["ok"] = rep.ok;
  j["violations"] = json::array();
  for (const auto& v : rep.violations)
    j["violations"].push_back({{"kind", v.kind}, {"detail", v.detail}});
  return j;
}

void emit(bool asJson, const json& j, const std::string& text) {
  if (asJson)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int runValidate(const std::string& file, bool asJson) {
  kgr::KGraph g = loadKGraph(file);
  kgr::ValidationReport rep = g.validate();
  emit(asJson, reportJson(rep), rep.ok ? "ok\n" : rep.summary());
  return rep.ok ? 0 : 1;
}

kgr::KGraph loadValidated(const std::string& file) {
  kgr::KGraph g = loadKGraph(file);
  if (!g.validated()) {
    kgr::ValidationReport rep = g.validate();
    if (!rep.ok) throw kgr::KgError("input fails validation: " + rep.summary());
  }
  return g;
}

int runCells(const std::string& file, const std::string& jsonOut) {
  kgr::KGraph g = loadValidated(file);
  kgr::CellComplex c = kgr::buildComplex(g);
  for (size_t r = 0; r < c.cells.size(); ++r)
    std::cout << "dim " << r << ": " << c.cells[r].size() << "\n";
  if (!jsonOut.empty()) {
    std::string text = kgr::complexToJson(c);
    if (jsonOut == "-")
      std::cout << text << "\n";
    else
      kgr::writeFile(jsonOut, text);
  }
  return 0;
}

int runEuler(const std::string& file, bool asJson) {
  kgr::KGraph g = loadValidated(file);
  long long chi = kgr::eulerCharacteristic(kgr::buildComplex(g));
  emit(asJson, json{{"euler", chi}}, std::to_string(chi) + "\n");
  return 0;
}

int runClassify(const std::string& file, bool asJson) {
  kgr::KGraph g = loadValidated(file);
  kgr::SurfaceType st = kgr::classifySurface(g);
  json j{{"kind", st.toString()}, {"euler", st.euler}};
  emit(asJson, j, st.toString() + "\n");
  return st.kind == kgr::SurfaceType::NotAClosedSurface ? 1 : 0;
}

int runPi1(const std::string& file, const std::string& baseName, bool simplify,
           bool doAbelianize, long long order, bool asJson) {
  kgr::KGraph g = loadValidated(file);
  auto v = g.vertexIndex(baseName);
  if (!v) throw kgr::KgError("unknown vertex " + baseName);
  kgr::Pi1Data pd = kgr::pi1Presentation(g, *v);
  kgr::GroupPresentation pres = pd.pres;
  if (simplify) pres = kgr::tietzeSimplify(pres);
  json j;
  j["presentation"] = kgr::presentationToText(pres);
  std::string text = kgr::presentationToText(pres);
  if (doAbelianize) {
    kgr::AbelianInvariants inv = kgr::abelianize(pres);
    j["rank"] = inv.rank;
    j["torsion"] = inv.torsion;
    std::string t = "rank " + std::to_string(inv.rank) + ", torsion [";
    for (size_t i = 0; i < inv.torsion.size(); ++i)
      t += (i ? "," : "") + std::to_string(inv.torsion[i]);
    text += t + "]\n";
  }
  if (order > 0) {
    kgr::CosetResult cr = kgr::cosetEnumerate(pres, cosetBound(order));
    if (cr.finite) {
      j["order"] = cr.order;
      text += "Finite(" + std::to_string(cr.order) + ")\n";
    } else {
      j["order"] = "Exceeded";
      text += "Exceeded\n";
    }
  }
  emit(asJson, j, text);
  return 0;
}

int runSkew(const std::string& file, const std::string& groupFile,
            const std::string& labelFile, const std::string& subgroup,
            bool asJson) {
  kgr::KGraph g = loadValidated(file);
  kgr::FiniteGroup grp = kgr::parseGroup(kgr::readFile(groupFile));
  kgr::GroupLabeling l = kgr::parseLabels(kgr::readFile(labelFile), g, grp);
  kgr::Covering cov;
  if (subgroup.empty()) {
    cov = kgr::skewProduct(l);
  } else {
    std::vector<int> h;
    std::stringstream ss(subgroup);
    std::string tok;
    while (std::getline(ss, tok, ',')) h.push_back(std::stoi(tok));
    cov = kgr::relativeSkewProduct(l, h);
  }
  std::string text = kgr::printKGraph(cov.total);
  json j;
  j["kgraph"] = text;
  j["fiberSize"] = cov.total.numVertices() / g.numVertices();
  emit(asJson, j, text);
  return 0;
}

int runCheckCover(const std::string& domFile, const std::string& codFile,
                  const std::string& mapFile, bool asJson) {
  kgr::KGraph dom = loadValidated(domFile);
  kgr::KGraph cod = loadValidated(codFile);
  kgr::GraphMorphism m =
      kgr::parseMorphism(kgr::readFile(mapFile), dom, cod);
  kgr::ValidationReport rep = kgr::verifyCovering(dom, cod, m);
  emit(asJson, reportJson(rep), rep.ok ? "ok\n" : rep.summary());
  return rep.ok ? 0 : 1;
}

int runDeck(const std::string& domFile, const std::string& codFile,
            const std::string& mapFile, bool asJson) {
  kgr::KGraph dom = loadValidated(domFile);
  kgr::KGraph cod = loadValidated(codFile);
  kgr::GraphMorphism m =
      kgr::parseMorphism(kgr::readFile(mapFile), dom, cod);
  kgr::ValidationReport rep = kgr::verifyCovering(dom, cod, m);
  if (!rep.ok) throw kgr::KgError("not a covering: " + rep.summary());
  std::vector<kgr::GraphMorphism> deck = kgr::deckGroup(dom, cod, m);
  bool regular = kgr::isRegular(dom, cod, m);
  json j;
  j["order"] = deck.size();
  j["regular"] = regular;
  std::string text = "deck group order " + std::to_string(deck.size()) +
                     (regular ? ", regular\n" : ", not regular\n");
  emit(asJson, j, text);
  return 0;
}

int runTower(const std::vector<std::string>& files,
             const std::vector<std::string>& mapFiles, bool asJson) {
  std::vector<kgr::KGraph> levels;
  for (const std::string& f : files) levels.push_back(loadValidated(f));
  if (mapFiles.size() + 1 != levels.size())
    throw kgr::KgError("need one --maps file per covering step");
  std::vector<kgr::GraphMorphism> maps;
  for (size_t n = 0; n + 1 < levels.size(); ++n)
    maps.push_back(kgr::parseMorphism(kgr::readFile(mapFiles[n]),
                                      levels[n + 1], levels[n]));
  kgr::Tower t;
  for (const kgr::KGraph& g : levels) t.levels.push_back(&g);
  t.maps = maps;
  kgr::KGraph sigma = kgr::towerSigma(t);
  std::string text = kgr::printKGraph(sigma);
  emit(asJson, json{{"kgraph", text}}, text);
  return 0;
}

int runCrossed(const std::string& file, const std::string& actionFile,
               bool asJson) {
  kgr::KGraph g = loadValidated(file);
  kgr::AutomorphismAction a =
      kgr::parseAction(kgr::readFile(actionFile), g);
  kgr::KGraph cp = kgr::crossedProduct(a);
  std::string text = kgr::printKGraph(cp);
  emit(asJson, json{{"kgraph", text}}, text);
  return 0;
}

int runCensus(const std::string& file, const std::string& actionFile,
              bool asJson) {
  kgr::KGraph g = loadValidated(file);
  kgr::AutomorphismAction a =
      kgr::parseAction(kgr::readFile(actionFile), g);
  std::vector<kgr::CensusRow> rows = kgr::crossedCubeCensus(a);
  json j = json::array();
  std::string text;
  bool allEqual = true;
  for (const kgr::CensusRow& r : rows) {
    j.push_back({{"m", r.m},
                 {"n", r.n},
                 {"count", r.count},
                 {"baseCount", r.baseCount},
                 {"equal", r.equal}});
    text += kgr::degToString(r.m) + " x " + kgr::degToString(r.n) + ": " +
            std::to_string(r.count) + " (base " +
            std::to_string(r.baseCount) + ")" + (r.equal ? "" : "  MISMATCH") +
            "\n";
    allEqual = allEqual && r.equal;
  }
  emit(asJson, j, text);
  return allEqual ? 0 : 1;
}

int runGallery(const std::string& name, bool asJson) {
  kgr::KGraph g = kgr::gallery(name);
  std::string text = kgr::printKGraph(g);
  emit(asJson, json{{"kgraph", text}}, text);
  return 0;
}

int runPres(const std::string& file, bool simplify, bool doAbelianize,
            long long order, bool asJson) {
  kgr::GroupPresentation p = kgr::presentationFromText(kgr::readFile(file));
  if (simplify) p = kgr::tietzeSimplify(p);
  json j;
  std::string text = kgr::presentationToText(p);
  j["presentation"] = text;
  if (doAbelianize) {
    kgr::AbelianInvariants inv = kgr::abelianize(p);
    j["rank"] = inv.rank;
    j["torsion"] = inv.torsion;
    text += inv.toString() + "\n";
  }
  if (order > 0) {
    kgr::CosetResult cr = kgr::cosetEnumerate(p, cosetBound(order));
    if (cr.finite) {
      j["order"] = cr.order;
      text += "Finite(" + std::to_string(cr.order) + ")\n";
    } else {
      j["order"] = "Exceeded";
      text += "Exceeded\n";
    }
  }
  emit(asJson, j, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite k-graph toolkit"};
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "machine-readable output");

  std::string file, base, groupFile, labelFile, subgroup, mapFile, actionFile;
  std::string codFile, jsonOut, name;
  std::vector<std::string> towerFiles, towerMaps;
  bool simplify = false, doAbelianize = false;
  long long order = 0;

  auto* cValidate = app.add_subcommand("validate", "check a k-graph file");
  cValidate->add_option("FILE", file)->required();

  auto* cCells = app.add_subcommand("cells", "cell census of the realization");
  cCells->add_option("FILE", file)->required();
  cCells->add_option("--json", jsonOut, "write the complex as JSON");

  auto* cEuler = app.add_subcommand("euler", "Euler characteristic");
  cEuler->add_option("FILE", file)->required();

  auto* cClassify = app.add_subcommand("classify", "closed-surface type");
  cClassify->add_option("FILE", file)->required();

  auto* cPi1 = app.add_subcommand("pi1", "fundamental group presentation");
  cPi1->add_option("FILE", file)->required();
  cPi1->add_option("--base", base)->required();
  cPi1->add_flag("--simplify", simplify);
  cPi1->add_flag("--abelianize", doAbelianize);
  cPi1->add_option("--order", order, "coset-enumerate up to MAX cosets");

  auto* cSkew = app.add_subcommand("skew", "(relative) skew product");
  cSkew->add_option("FILE", file)->required();
  cSkew->add_option("--group", groupFile)->required();
  cSkew->add_option("--labels", labelFile)->required();
  cSkew->add_option("--subgroup", subgroup, "comma-separated elements");

  auto* cCheck = app.add_subcommand("check-cover", "verify covering axioms");
  cCheck->add_option("DOM", file)->required();
  cCheck->add_option("COD", codFile)->required();
  cCheck->add_option("MAPFILE", mapFile)->required();

  auto* cDeck = app.add_subcommand("deck", "deck transformation group");
  cDeck->add_option("DOM", file)->required();
  cDeck->add_option("COD", codFile)->required();
  cDeck->add_option("MAPFILE", mapFile)->required();

  auto* cTower = app.add_subcommand("tower", "assemble a covering tower");
  cTower->add_option("FILE", towerFiles)->required();
  cTower->add_option("--maps", towerMaps);

  auto* cCrossed = app.add_subcommand("crossed", "crossed product by Z^l");
  cCrossed->add_option("FILE", file)->required();
  cCrossed->add_option("--action", actionFile)->required();

  auto* cCensus = app.add_subcommand("census", "mapping-torus cube census");
  cCensus->add_option("FILE", file)->required();
  cCensus->add_option("--action", actionFile)->required();

  auto* cGallery = app.add_subcommand("gallery", "print a built-in example");
  cGallery->add_option("NAME", name)->required();

  auto* cPres = app.add_subcommand("pres", "work with a presentation file");
  cPres->add_option("FILE", file)->required();
  cPres->add_flag("--simplify", simplify);
  cPres->add_flag("--abelianize", doAbelianize);
  cPres->add_option("--order", order);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cValidate->parsed()) return runValidate(file, asJson);
    if (cCells->parsed()) return runCells(file, jsonOut);
    if (cEuler->parsed()) return runEuler(file, asJson);
    if (cClassify->parsed()) return runClassify(file, asJson);
    if (cPi1->parsed())
      return runPi1(file, base, simplify, doAbelianize, order, asJson);
    if (cSkew->parsed())
      return runSkew(file, groupFile, labelFile, subgroup, asJson);
    if (cCheck->parsed()) return runCheckCover(file, codFile, mapFile, asJson);
    if (cDeck->parsed()) return runDeck(file, codFile, mapFile, asJson);
    if (cTower->parsed()) return runTower(towerFiles, towerMaps, asJson);
    if (cCrossed->parsed()) return runCrossed(file, actionFile, asJson);
    if (cCensus->parsed()) return runCensus(file, actionFile, asJson);
    if (cGallery->parsed()) return runGallery(name, asJson);
    if (cPres->parsed())
      return runPres(file, simplify, doAbelianize, order, asJson);
  } catch (const kgr::KgError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
