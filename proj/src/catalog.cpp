#include "hmtk/catalog.hpp"

#include <filesystem>
#include <fstream>

#include "hmtk/errors.hpp"
#include "json.hpp"

namespace hmtk {

const char* to_string(NormalEvidence e) {
  switch (e) {
    case NormalEvidence::yes: return "yes";
    case NormalEvidence::no: return "no";
    default: return "unknown";
  }
}

namespace {

std::vector<CatalogEntry> build_registry() {
  const AnalyticExpr z = AnalyticExpr::identity();
  const AnalyticExpr zero = AnalyticExpr::constant(Complex(0.0, 0.0));
  // (1+z)/(1-z): maps the disk onto the right half-plane, 1 -> infinity.
  const AnalyticExpr cayley = AnalyticExpr::moebius(Complex(1.0, 0.0), Complex(1.0, 0.0),
                                                    Complex(-1.0, 0.0), Complex(1.0, 0.0));

  std::vector<CatalogEntry> entries;
  entries.push_back({"identity",
                     HarmonicMap(z, zero),
                     {NormalEvidence::yes, true, true, true},
                     "h = z, g = 0"});
  entries.push_back({"const-dilatation-0.5",
                     HarmonicMap(z, AnalyticExpr::polynomial({Complex(0.0, 0.0), Complex(0.5, 0.0)})),
                     {NormalEvidence::yes, true, true, true},
                     "h = z with constant dilatation 1/2"});
  entries.push_back({"bounded-normal",
                     HarmonicMap(AnalyticExpr::polynomial({Complex(0.5, 0.0), Complex(-0.5, 0.0)}),
                                 zero),
                     {NormalEvidence::yes, true, true, true},
                     "affine contraction (1 - z)/2"});
  entries.push_back({"exp-blowup",
                     HarmonicMap(AnalyticExpr::exp_of(AnalyticExpr::product(
                                     AnalyticExpr::constant(Complex(0.0, 1.0)), cayley)),
                                 zero),
                     {NormalEvidence::no, false, true, true},
                     "exp(i(1+z)/(1-z)): unimodular along the real axis, spherical "
                     "derivative blows up toward z = 1"});
  entries.push_back({"exp-decay",
                     HarmonicMap(AnalyticExpr::exp_of(AnalyticExpr::product(
                                     AnalyticExpr::constant(Complex(-1.0, 0.0)), cayley)),
                                 zero),
                     {NormalEvidence::yes, true, true, true},
                     "exp(-(1+z)/(1-z)): decays to 0 toward z = 1"});
  entries.push_back({"poly-harmonic",
                     HarmonicMap(z, AnalyticExpr::polynomial({Complex(0.0, 0.0), Complex(0.0, 0.0),
                                                              Complex(0.5, 0.0)})),
                     {NormalEvidence::yes, true, true, true},
                     "h = z, g = z^2/2"});
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> registry = build_registry();
  return registry;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const CatalogEntry& e : catalog_entries()) names.push_back(e.name);
  return names;
}

const CatalogEntry& catalog_get(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) return e;
  throw UnknownEntry("unknown catalog entry: " + name);
}

HarmonicMap load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnknownEntry("cannot open mapping file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw DomainError("bad mapping file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("h"))
    throw DomainError("mapping file needs an object with \"h\" (optional \"g\", \"z0\"): " + path);
  AnalyticExpr h = AnalyticExpr::from_json(j.at("h"));
  AnalyticExpr g = j.contains("g") ? AnalyticExpr::from_json(j.at("g"))
                                   : AnalyticExpr::constant(Complex(0.0, 0.0));
  const DiskPoint z0 = j.contains("z0") ? DiskPoint(complex_from_json(j.at("z0"))) : DiskPoint();
  return HarmonicMap(std::move(h), std::move(g), z0);
}

HarmonicMap resolve_map(const std::string& name_or_path) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name_or_path) return e.map;
  if (std::filesystem::exists(name_or_path)) return load_map_file(name_or_path);
  throw UnknownEntry("no catalog entry or mapping file named '" + name_or_path + "'");
}

}  // namespace hmtk
