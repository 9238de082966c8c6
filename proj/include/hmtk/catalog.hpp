#pragma once

#include <string>
#include <vector>

#include "hmtk/harmonic.hpp"

namespace hmtk {

// Declared, never inferred: normality is not decidable from finitely many
// samples, so each entry states what the example is understood to be.
enum class NormalEvidence { yes, no, unknown };

const char* to_string(NormalEvidence e);

struct CatalogAttributes {
  NormalEvidence normal_evidence = NormalEvidence::unknown;
  bool h_bounded = false;
  bool g_bounded = false;
  bool sense_preserving = false;
};

struct CatalogEntry {
  std::string name;
  HarmonicMap map;
  CatalogAttributes attributes;
  std::string note;
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_names();
const CatalogEntry& catalog_get(const std::string& name);  // throws UnknownEntry

// Mapping-spec JSON file: {"h": <expr>, "g": <expr, optional>, "z0": [re, im] optional}.
HarmonicMap load_map_file(const std::string& path);

// Catalog name first, then a mapping-spec file path.
HarmonicMap resolve_map(const std::string& name_or_path);

}  // namespace hmtk
