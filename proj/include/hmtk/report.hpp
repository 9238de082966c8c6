#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hmtk/boundary.hpp"
#include "hmtk/max_principle.hpp"
#include "hmtk/normality.hpp"
#include "hmtk/rescaling.hpp"

namespace hmtk {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// Complex as [re, im]; the point at infinity as the string "inf".
Json complex_json(Complex z);
Json extended_json(const ExtendedComplex& v);

// Reproducibility envelope. Wall time is deliberately not part of this:
// reruns with identical command+arguments+seed must be byte-identical, so
// timing goes to stderr instead.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  long seed = 0;
};

Json envelope(const RunManifest& manifest, Json result);

Json to_report(const NormalityEstimate& est);
Json to_report(const FivePointReport& rep);
Json to_report(const ZoomFrame& frame);  // layout + stored scalars; samples go to CSV
Json to_report(const BlowupSequence& seq);
Json to_report(const ProbeVerdict& verdict);
Json to_report(const MaxPrincipleReport& rep);
Json to_report(const LimitProbe& probe);
Json to_report(const AgreementReport& rep);
Json to_report(const LappanVerdict& verdict);
Json to_report(const CollapseVerdict& verdict);
Json catalog_report();

// CSV emitters (header row; one sample per row; 17 significant digits).
void write_frame_csv(std::ostream& os, const ZoomFrame& frame);
void write_samples_csv(std::ostream& os, const std::vector<std::pair<Complex, double>>& rows);
void write_polygon_csv(std::ostream& os, const LensPolygon& lens);

// pairs CSV: z_re,z_im,w_re,w_im with an optional header row.
std::vector<std::pair<DiskPoint, DiskPoint>> read_pairs_csv(const std::string& path);

}  // namespace hmtk
