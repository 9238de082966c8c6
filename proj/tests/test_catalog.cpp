#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hmtk/catalog.hpp"
#include "hmtk/normality.hpp"

using namespace hmtk;

namespace {

std::filesystem::path temp_json(const std::string& stem, const std::string& body) {
  const std::filesystem::path p =
      std::filesystem::temp_directory_path() / ("hmtk_test_" + stem + ".json");
  std::ofstream out(p);
  out << body;
  return p;
}

struct FileGuard {
  std::filesystem::path p;
  ~FileGuard() { std::error_code ec; std::filesystem::remove(p, ec); }
};

}  // namespace

TEST_CASE("registry contents") {
  const std::vector<std::string> names = catalog_names();
  REQUIRE(names.size() == 6);
  for (const char* expected : {"identity", "const-dilatation-0.5", "bounded-normal",
                               "exp-blowup", "exp-decay", "poly-harmonic"})
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());

  const CatalogEntry& id = catalog_get("identity");
  CHECK(id.attributes.normal_evidence == NormalEvidence::yes);
  CHECK(id.attributes.h_bounded);
  CHECK(id.attributes.g_bounded);
  CHECK(id.attributes.sense_preserving);
  CHECK(!id.note.empty());

  const CatalogEntry& blowup = catalog_get("exp-blowup");
  CHECK(blowup.attributes.normal_evidence == NormalEvidence::no);
  CHECK(!blowup.attributes.h_bounded);
  CHECK(blowup.attributes.g_bounded);

  CHECK(std::string(to_string(NormalEvidence::yes)) == "yes");
  CHECK(std::string(to_string(NormalEvidence::no)) == "no");
  CHECK(std::string(to_string(NormalEvidence::unknown)) == "unknown");

  CHECK_THROWS_AS(catalog_get("does-not-exist"), UnknownEntry);
}

TEST_CASE("declared attributes agree with sampling") {
  GridConfig cfg;
  for (const CatalogEntry& e : catalog_entries()) {
    CAPTURE(e.name);
    const SenseCheck sense = sense_preserving_sample(e.map, cfg);
    CHECK(sense.ok == e.attributes.sense_preserving);

    const NormalityEstimate est = normality_constant(e.map, cfg);
    CHECK(est.diverging == (e.attributes.normal_evidence == NormalEvidence::no));
  }
}

TEST_CASE("mapping files round trip") {
  FileGuard file{temp_json("roundtrip", R"({
    "h": {"op": "poly", "coeffs": [[0.0, 0.0], [1.0, 0.0], [0.25, -0.5]]},
    "g": {"op": "poly", "coeffs": [[0.0, 0.0], [0.0, 0.5]]}
  })")};

  const HarmonicMap f = load_map_file(file.p.string());
  const DiskPoint z(Complex(0.3, -0.2));
  const Complex expect_h = Complex(0.3, -0.2) + Complex(0.25, -0.5) * Complex(0.3, -0.2) * Complex(0.3, -0.2);
  const Complex expect_g = Complex(0.0, 0.5) * Complex(0.3, -0.2);
  CHECK(std::abs(f.h().eval(z.value()) - expect_h) <= 1e-15);
  CHECK(std::abs(eval_f(f, z) - (expect_h + std::conj(expect_g))) <= 1e-15);
  CHECK(f.z0().value() == Complex(0.0, 0.0));
}

TEST_CASE("mapping files: h only, custom base point") {
  FileGuard file{temp_json("honly", R"({
    "h": {"op": "exp", "arg": {"op": "mobius", "a": [1,0], "b": [1,0], "c": [-1,0], "d": [1,0]}},
    "z0": [0.25, 0.0]
  })")};
  const HarmonicMap f = load_map_file(file.p.string());
  CHECK(f.z0().value() == Complex(0.25, 0.0));
  // g defaults to the zero map
  CHECK(std::abs(f.g().eval(Complex(0.5, 0.5))) == 0.0);
}

TEST_CASE("mapping file failure modes") {
  CHECK_THROWS_AS(load_map_file("/no/such/place/map.json"), UnknownEntry);

  FileGuard bad{temp_json("badsyntax", "{ not json at all")};
  CHECK_THROWS_AS(load_map_file(bad.p.string()), DomainError);

  FileGuard noh{temp_json("missingh", R"({"g": {"op": "z"}})")};
  CHECK_THROWS_AS(load_map_file(noh.p.string()), DomainError);
}

TEST_CASE("resolve_map prefers the catalog, then the filesystem") {
  const HarmonicMap id = resolve_map("identity");
  CHECK(std::abs(eval_f(id, DiskPoint(Complex(0.3, 0.4))) - Complex(0.3, 0.4)) == 0.0);

  FileGuard file{temp_json("resolve", R"({"h": {"op": "poly", "coeffs": [[2.0, 0.0]]}})")};
  const HarmonicMap c = resolve_map(file.p.string());
  CHECK(std::abs(eval_f(c, DiskPoint(Complex(0.1, 0.1))) - Complex(2.0, 0.0)) == 0.0);

  CHECK_THROWS_AS(resolve_map("neither-name-nor-file"), UnknownEntry);
}
