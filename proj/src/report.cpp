#include "hmtk/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hmtk/catalog.hpp"
#include "hmtk/errors.hpp"

namespace hmtk {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json extended_json(const ExtendedComplex& v) {
  if (v.is_infinity()) return "inf";
  return complex_json(v.value());
}

Json envelope(const RunManifest& manifest, Json result) {
  Json j;
  j["manifest"] = Json{{"command", manifest.command},
                       {"arguments", manifest.arguments},
                       {"seed", manifest.seed},
                       {"version", kToolVersion}};
  j["result"] = std::move(result);
  return j;
}

Json to_report(const NormalityEstimate& est) {
  Json j;
  j["objective"] = est.objective;
  j["lower_bound"] = est.lower_bound;
  j["witness"] = complex_json(est.witness.value());
  if (est.co_witness) j["co_witness"] = complex_json(est.co_witness->value());
  j["evals"] = est.evals;
  j["depth_used"] = est.depth_used;
  j["diverging"] = est.diverging;
  j["per_level"] = est.per_level;
  return j;
}

Json to_report(const FivePointReport& rep) {
  Json values = Json::array();
  for (const FivePointValue& v : rep.values) {
    Json entry;
    entry["value"] = extended_json(v.value);
    entry["sup"] = v.sup;
    entry["empty"] = v.empty;
    entry["stalled"] = v.stalled;
    Json pre = Json::array();
    for (const Complex& z : v.preimages) pre.push_back(complex_json(z));
    entry["preimages"] = std::move(pre);
    values.push_back(std::move(entry));
  }
  Json j;
  j["sense_preserving_ok"] = rep.sense_preserving_ok;
  j["values"] = std::move(values);
  return j;
}

Json to_report(const ZoomFrame& frame) {
  Json j;
  j["center"] = complex_json(frame.center.value());
  j["scale"] = frame.scale;
  j["R"] = frame.big_r;
  j["frame_radius"] = frame.frame_radius;
  j["side"] = frame.side;
  j["f_sharp_0"] = frame.f_sharp_0;
  long valid = 0;
  for (const auto& s : frame.samples)
    if (s) ++valid;
  j["valid_samples"] = valid;
  return j;
}

Json to_report(const BlowupSequence& seq) {
  Json entries = Json::array();
  for (const BlowupEntry& e : seq.entries) {
    Json entry;
    entry["r"] = e.r;
    entry["z"] = complex_json(e.z.value());
    entry["M"] = e.M;
    entry["rho"] = e.rho;
    entries.push_back(std::move(entry));
  }
  Json j;
  j["entries"] = std::move(entries);
  return j;
}

Json to_report(const ProbeVerdict& verdict) {
  Json j;
  j["verdict"] = verdict.converging ? "converging" : "not-converging";
  j["nonconstant"] = verdict.nonconstant;
  j["sup_chi"] = verdict.sup_chi;
  return j;
}

Json to_report(const MaxPrincipleReport& rep) {
  Json j;
  j["kappa"] = rep.kappa;
  j["t0"] = rep.t0;
  j["delta0"] = rep.delta0;
  j["eta"] = rep.eta;
  j["hypothesis_ok"] = rep.hypothesis_ok;
  j["conclusion_ok"] = rep.conclusion_ok;
  j["worst_boundary"] =
      Json{{"point", complex_json(rep.worst_boundary_point)}, {"abs_f", rep.worst_boundary_value}};
  j["worst_interior"] =
      Json{{"point", complex_json(rep.worst_interior_point)}, {"abs_f", rep.worst_interior_value}};
  j["normality_estimate"] = rep.normality_estimate;
  j["interior_samples"] = rep.interior_samples;
  return j;
}

Json to_report(const LimitProbe& probe) {
  Json j;
  j["divergent"] = probe.divergent;
  if (!probe.divergent) j["value"] = extended_json(probe.value);
  j["tail_spread"] = probe.tail_spread;
  j["samples_used"] = probe.samples_used;
  return j;
}

Json to_report(const AgreementReport& rep) {
  Json j;
  j["agrees"] = rep.agrees;
  j["normality_evidence"] = rep.normality_evidence;
  j["asymptotic"] = to_report(rep.asymptotic);
  j["angular"] = to_report(rep.angular);
  return j;
}

Json to_report(const LappanVerdict& verdict) {
  Json j;
  j["verdict"] = verdict.consistent ? "consistent" : "violation";
  if (verdict.witness_index) j["witness_index"] = *verdict.witness_index;
  j["first_chi"] = verdict.first_chi;
  j["tail_max"] = verdict.tail_max;
  return j;
}

Json to_report(const CollapseVerdict& verdict) {
  Json j;
  j["verdict"] = verdict.consistent ? "consistent" : "violation";
  j["arc_collapses"] = verdict.arc_collapses;
  j["disks_collapse"] = verdict.disks_collapse;
  j["normality_warning"] = verdict.normality_warning;
  j["uniform_bound"] = verdict.uniform_bound;
  j["arc_max"] = verdict.arc_max;
  j["disk_max"] = verdict.disk_max;
  return j;
}

Json catalog_report() {
  Json list = Json::array();
  for (const CatalogEntry& e : catalog_entries()) {
    Json entry;
    entry["name"] = e.name;
    entry["attributes"] = Json{{"normal_evidence", to_string(e.attributes.normal_evidence)},
                               {"h_bounded", e.attributes.h_bounded},
                               {"g_bounded", e.attributes.g_bounded},
                               {"sense_preserving", e.attributes.sense_preserving}};
    entry["note"] = e.note;
    list.push_back(std::move(entry));
  }
  Json j;
  j["entries"] = std::move(list);
  return j;
}

namespace {
std::ostream& csv_stream(std::ostream& os) {
  os << std::setprecision(17);
  return os;
}
}  // namespace

void write_frame_csv(std::ostream& os, const ZoomFrame& frame) {
  csv_stream(os) << "zeta_re,zeta_im,F_re,F_im\n";
  for (int i = 0; i < frame.side; ++i)
    for (int j = 0; j < frame.side; ++j) {
      const auto& s = frame.at(i, j);
      if (!s) continue;
      const Complex zeta = frame.lattice(i, j);
      os << zeta.real() << ',' << zeta.imag() << ',' << s->real() << ',' << s->imag() << '\n';
    }
}

void write_samples_csv(std::ostream& os, const std::vector<std::pair<Complex, double>>& rows) {
  csv_stream(os) << "z_re,z_im,value\n";
  for (const auto& [z, v] : rows) os << z.real() << ',' << z.imag() << ',' << v << '\n';
}

void write_polygon_csv(std::ostream& os, const LensPolygon& lens) {
  csv_stream(os) << "x,y,part\n";
  for (const Complex& v : lens.free_part.vertices())
    os << v.real() << ',' << v.imag() << ",free\n";
  for (const Complex& v : lens.arc_part.vertices())
    os << v.real() << ',' << v.imag() << ",arc\n";
}

std::vector<std::pair<DiskPoint, DiskPoint>> read_pairs_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open pairs file: " + path);
  std::vector<std::pair<DiskPoint, DiskPoint>> pairs;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double v[4];
    char comma;
    if (!(row >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3])) {
      if (first) {  // header row
        first = false;
        continue;
      }
      throw DomainError("bad pairs row: " + line);
    }
    first = false;
    pairs.emplace_back(DiskPoint(Complex(v[0], v[1])), DiskPoint(Complex(v[2], v[3])));
  }
  if (pairs.empty()) throw DomainError("pairs file has no data rows: " + path);
  return pairs;
}

}  // namespace hmtk
