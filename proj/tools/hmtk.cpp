#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hmtk/boundary.hpp"
#include "hmtk/catalog.hpp"
#include "hmtk/errors.hpp"
#include "hmtk/max_principle.hpp"
#include "hmtk/normality.hpp"
#include "hmtk/report.hpp"
#include "hmtk/rescaling.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hmtk::Complex parse_complex(const std::string& text) {
  std::istringstream ss(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(ss >> re)) throw Usage("expected complex as re,im: '" + text + "'");
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im)) throw Usage("expected complex as re,im: '" + text + "'");
  }
  std::string rest;
  if (ss >> rest) throw Usage("trailing junk in complex '" + text + "'");
  return {re, im};
}

hmtk::ExtendedComplex parse_extended(const std::string& text) {
  if (text == "inf" || text == "infinity") return hmtk::ExtendedComplex::infinity();
  return hmtk::ExtendedComplex(parse_complex(text));
}

std::string num(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

// Common tuning knobs shared by the estimator subcommands.
struct CommonOpts {
  std::string map = "identity";
  int depth = 4;
  int mesh = 32;
  double tol = 1e-3;
  long seed = 0;
  std::string json_path;
  std::string csv_path;
};

void add_common(CLI::App* sub, CommonOpts& o, bool with_grid = true) {
  sub->add_option("--map", o.map, "catalog name or mapping-spec JSON file");
  if (with_grid) {
    sub->add_option("--depth", o.depth, "refinement depth");
    sub->add_option("--mesh", o.mesh, "initial polar mesh");
    sub->add_option("--tol", o.tol, "improvement tolerance");
  }
  sub->add_option("--seed", o.seed, "rng seed");
  sub->add_option("--json", o.json_path, "also write the JSON report here");
  sub->add_option("--csv", o.csv_path, "write plot-ready CSV here");
}

hmtk::GridConfig make_cfg(const CommonOpts& o) {
  hmtk::GridConfig cfg;
  cfg.refine_depth = o.depth;
  cfg.initial_mesh = o.mesh;
  cfg.tol = o.tol;
  cfg.rng_seed = o.seed;
  return cfg;
}

std::vector<std::string> grid_args(const CommonOpts& o) {
  return {"--map=" + o.map, "--depth=" + std::to_string(o.depth),
          "--mesh=" + std::to_string(o.mesh), "--tol=" + num(o.tol),
          "--seed=" + std::to_string(o.seed)};
}

// Output paths stay out of the manifest: they do not affect the computation
// and the determinism contract keys on command+arguments+seed.
void emit(const std::string& command, std::vector<std::string> arguments, long seed,
          hmtk::Json result, const CommonOpts& o) {
  hmtk::RunManifest manifest;
  manifest.command = command;
  manifest.arguments = std::move(arguments);
  manifest.seed = seed;
  const std::string text = hmtk::envelope(manifest, std::move(result)).dump(2) + "\n";
  std::cout << text;
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) throw hmtk::DomainError("cannot write " + o.json_path);
    out << text;
  }
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw hmtk::DomainError("cannot write " + path);
  return out;
}

hmtk::PathPolyline read_path_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hmtk::DomainError("cannot open path file: " + path);
  std::vector<hmtk::Complex> vertices;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double x = 0.0, y = 0.0;
    char comma = 0;
    if (!(row >> x >> comma >> y)) {
      if (first) {
        first = false;
        continue;  // header row
      }
      throw hmtk::DomainError("bad path row: " + line);
    }
    first = false;
    vertices.emplace_back(x, y);
  }
  return hmtk::PathPolyline(vertices);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for planar harmonic mappings f = h + conj(g) on the unit disk"};
  app.require_subcommand(1);

  const auto started = std::chrono::steady_clock::now();

  // eval ----------------------------------------------------------------
  CommonOpts eval_o;
  std::string eval_z = "0,0";
  auto* eval_cmd = app.add_subcommand("eval", "evaluate f, f# and the Jacobian at a point");
  add_common(eval_cmd, eval_o, false);
  eval_cmd->add_option("--z", eval_z, "evaluation point re,im");
  eval_cmd->callback([&] {
    const hmtk::HarmonicMap f = hmtk::resolve_map(eval_o.map);
    const hmtk::DiskPoint z(parse_complex(eval_z));
    hmtk::Json result;
    result["z"] = hmtk::complex_json(z.value());
    result["h"] = hmtk::complex_json(f.h().eval(z.value()));
    result["g"] = hmtk::complex_json(f.g().eval(z.value()));
    result["f"] = hmtk::complex_json(hmtk::eval_f(f, z));
    result["f_sharp"] = hmtk::spherical_derivative(f, z);
    result["jacobian"] = hmtk::jacobian(f, z);
    emit("eval", {"--map=" + eval_o.map, "--z=" + eval_z, "--seed=" + std::to_string(eval_o.seed)},
         eval_o.seed, std::move(result), eval_o);
  });

  // normality -----------------------------------------------------------
  CommonOpts norm_o;
  auto* norm_cmd = app.add_subcommand("normality", "lower-bound sweep for sup (1-|z|^2) f#");
  add_common(norm_cmd, norm_o);
  norm_cmd->callback([&] {
    const hmtk::HarmonicMap f = hmtk::resolve_map(norm_o.map);
    std::vector<std::pair<hmtk::Complex, double>> rows;
    hmtk::SampleRecorder recorder;
    if (!norm_o.csv_path.empty())
      recorder = [&rows](hmtk::Complex z, double v) { rows.emplace_back(z, v); };
    const auto est = hmtk::normality_constant(f, make_cfg(norm_o),
                                              recorder ? &recorder : nullptr);
    if (!norm_o.csv_path.empty()) {
      auto out = open_csv(norm_o.csv_path);
      hmtk::write_samples_csv(out, rows);
    }
    emit("normality", grid_args(norm_o), norm_o.seed, hmtk::to_report(est), norm_o);
  });

  // pcrit ---------------------------------------------------------------
  CommonOpts pcrit_o;
  double pcrit_p = 2.0;
  auto* pcrit_cmd = app.add_subcommand("pcrit", "two-point functional sweep");
  add_common(pcrit_cmd, pcrit_o);
  pcrit_cmd->add_option("--p", pcrit_p, "exponent p > 0");
  pcrit_cmd->callback([&] {
    const hmtk::HarmonicMap f = hmtk::resolve_map(pcrit_o.map);
    const auto est = hmtk::p_criterion(f, pcrit_p, make_cfg(pcrit_o));
    auto args = grid_args(pcrit_o);
    args.push_back("--p=" + num(pcrit_p));
    emit("pcrit", std::move(args), pcrit_o.seed, hmtk::to_report(est), pcrit_o);
  });

  // fivepoint -----------------------------------------------------------
  CommonOpts five_o;
  std::vector<std::string> five_values;
  auto* five_cmd = app.add_subcommand("fivepoint", "preimage sweep over five sphere values");
  add_common(five_cmd, five_o);
  five_cmd->add_option("--values", five_values, "five values: re,im or inf")->expected(5);
  five_cmd->callback([&] {
    const hmtk::HarmonicMap f = hmtk::resolve_map(five_o.map);
    if (five_values.size() != 5) throw Usage("--values needs exactly five entries");
    std::array<hmtk::ExtendedComplex, 5> values;
    for (int i = 0; i < 5; ++i) values[i] = parse_extended(five_values[i]);
    const auto report = hmtk::five_point_test(f, values, make_cfg(five_o));
    auto args = grid_args(five_o);
    for (const std::string& v : five_values) args.push_back("--values=" + v);
    emit("fivepoint", std::move(args), five_o.seed, hmtk::to_report(report), five_o);
  });

  // dgrowth -------------------------------------------------------------
  CommonOpts dg_o;
  int dg_n = 1;
  double dg_k = 1.0;
  auto* dg_cmd = app.add_subcommand("dgrowth", "derivative growth sweep on {|f| <= K}");
  add_common(dg_cmd, dg_o);
  dg_cmd->add_option("--n", dg_n, "derivative order >= 1");
  dg_cmd->add_option("--K", dg_k, "value bound K > 0");
  dg_cmd->callback([&] {
    const hmtk::HarmonicMap f = hmtk::resolve_map(dg_o.map);
    std::vector<std::pair<hmtk::Complex, double>> rows;
    hmtk::SampleRecorder recorder;
    if (!dg_o.csv_path.empty())
      recorder = [&rows](hmtk::Complex z, double v) { rows.emplace_back(z, v); };
    const auto est =
        hmtk::derivative_growth(f, dg_n, dg_k, make_cfg(dg_o), recorder ? &recorder : nullptr);
    if (!dg_o.csv_path.empty()) {
      auto out = open_csv(dg_o.csv_path);
      hmtk::write_samples_csv(out, rows);
    }
    auto args = grid_args(dg_o);
    args.push_back("--n=" + std::to_string(dg_n));
    args.push_back("--K=" + num(dg_k));
    emit("dgrowth", std::move(args), dg_o.seed, hmtk::to_report(est), dg_o);
  });

  // zoom ----------------------------------------------------------------
  CommonOpts zoom_o;
  std::string zoom_center = "0,0";
  double zoom_rho = 0.1, zoom_radius = 1.0;
  int zoom_mesh = 33;
  auto* zoom_cmd = app.add_subcommand("zoom", "sample a rescaled frame f(zc + rho zeta)");
  add_common(zoom_cmd, zoom_o, false);
  zoom_cmd->add_option("--center", zoom_center, "frame center re,im");
  zoom_cmd->add_option("--rho", zoom_rho, "zoom scale > 0");
  zoom_cmd->add_option("--radius", zoom_radius, "frame radius in zeta");
  zoom_cmd->add_option("--frame-mesh", zoom_mesh, "odd lattice side");
  zoom_cmd->callback([&] {
    const hmtk::HarmonicMap f = hmtk::resolve_map(zoom_o.map);
    const hmtk::DiskPoint zc(parse_complex(zoom_center));
    const auto frame = hmtk::zoom(f, zc, zoom_rho, zoom_radius, zoom_mesh);
    if (!zoom_o.csv_path.empty()) {
      auto out = open_csv(zoom_o.csv_path);
      hmtk::write_frame_csv(out, frame);
    }
    emit("zoom",
         {"--map=" + zoom_o.map, "--center=" + zoom_center, "--rho=" + num(zoom_rho),
          "--radius=" + num(zoom_radius), "--frame-mesh=" + std::to_string(zoom_mesh),
          "--seed=" + std::to_string(zoom_o.seed)},
         zoom_o.seed, hmtk::to_report(frame), zoom_o);
  });

  // blowup --------------------------------------------------------------
  CommonOpts blow_o;
  int blow_levels = 12;
  auto* blow_cmd = app.add_subcommand("blowup", "blow-up extraction along r_n = 1 - 2^-n");
  add_common(blow_cmd, blow_o);
  blow_cmd->add_option("--levels", blow_levels, "schedule length (n = 1..levels)");
  blow_cmd->callback([&] {
    const hmtk::HarmonicMap f = hmtk::resolve_map(blow_o.map);
    if (blow_levels < 1 || blow_levels > 50) throw Usage("--levels must lie in 1..50");
    std::vector<double> schedule;
    for (int n = 1; n <= blow_levels; ++n) schedule.push_back(1.0 - std::pow(2.0, -n));
    const auto seq = hmtk::extract_blowup(f, schedule, make_cfg(blow_o));
    if (!blow_o.csv_path.empty()) {
      auto out = open_csv(blow_o.csv_path);
      out << std::setprecision(17) << "r,z_re,z_im,M,rho\n";
      for (const auto& e : seq.entries)
        out << e.r << ',' << e.z.value().real() << ',' << e.z.value().imag() << ',' << e.M << ','
            << e.rho << '\n';
    }
    auto args = grid_args(blow_o);
    args.push_back("--levels=" + std::to_string(blow_levels));
    emit("blowup", std::move(args), blow_o.seed, hmtk::to_report(seq), blow_o);
  });

  // maxprin -------------------------------------------------------------
  CommonOpts mp_o;
  double mp_alpha = 1.0, mp_beta = kPi / 2.0, mp_delta = 0.1, mp_shrink = 0.9;
  int mp_segments = 64;
  auto* mp_cmd = app.add_subcommand("maxprin", "maximum-principle check on a lens region");
  add_common(mp_cmd, mp_o);
  mp_cmd->add_option("--alpha", mp_alpha, "assumed normality bound");
  mp_cmd->add_option("--beta", mp_beta, "lens angle in (0, pi)");
  mp_cmd->add_option("--delta", mp_delta, "boundary bound on the free part");
  mp_cmd->add_option("--segments", mp_segments, "arc chords in the lens polygon");
  mp_cmd->add_option("--shrink", mp_shrink, "lens scale factor in (0,1)");
  mp_cmd->callback([&] {
    const hmtk::HarmonicMap f = hmtk::resolve_map(mp_o.map);
    hmtk::LensConfig lens;
    lens.alpha = mp_alpha;
    lens.beta = mp_beta;
    lens.delta = mp_delta;
    lens.validate();
    // Fail on delta >= delta0 before any geometry is built.
    hmtk::solve_eta(mp_delta, hmtk::kappa(mp_alpha, mp_beta));
    const auto poly = hmtk::lens_polygon(mp_beta, mp_segments, mp_shrink);
    if (!mp_o.csv_path.empty()) {
      auto out = open_csv(mp_o.csv_path);
      hmtk::write_polygon_csv(out, poly);
    }
    const hmtk::Region region{poly.free_part, poly.arc_part};
    const auto report = hmtk::verify_max_principle(f, region, lens, make_cfg(mp_o));
    auto args = grid_args(mp_o);
    args.push_back("--alpha=" + num(mp_alpha));
    args.push_back("--beta=" + num(mp_beta));
    args.push_back("--delta=" + num(mp_delta));
    args.push_back("--segments=" + std::to_string(mp_segments));
    args.push_back("--shrink=" + num(mp_shrink));
    emit("maxprin", std::move(args), mp_o.seed, hmtk::to_report(report), mp_o);
  });

  // boundary ------------------------------------------------------------
  CommonOpts bd_o;
  std::string bd_xi = "1,0";
  std::string bd_path;
  std::vector<double> bd_openings{kPi / 6.0, kPi / 3.0};
  int bd_samples = 40;
  double bd_tol = 1e-6;
  auto* bd_cmd = app.add_subcommand("boundary", "asymptotic vs angular limit at a boundary point");
  add_common(bd_cmd, bd_o);
  bd_cmd->add_option("--xi", bd_xi, "boundary point re,im with |xi| = 1");
  bd_cmd->add_option("--path", bd_path, "CSV polyline x,y ending at xi (default: radius)");
  bd_cmd->add_option("--openings", bd_openings, "Stolz openings in (0, pi/2)");
  bd_cmd->add_option("--samples", bd_samples, "samples per probe");
  bd_cmd->add_option("--probe-tol", bd_tol, "chordal tolerance");
  bd_cmd->callback([&] {
    const hmtk::HarmonicMap f = hmtk::resolve_map(bd_o.map);
    const hmtk::Complex xi = parse_complex(bd_xi);
    const hmtk::PathPolyline gamma =
        bd_path.empty() ? hmtk::PathPolyline({hmtk::Complex(0.0, 0.0), xi / std::abs(xi)})
                        : read_path_csv(bd_path);
    const auto normality = hmtk::normality_constant(f, make_cfg(bd_o));
    const auto report = hmtk::asymptotic_equals_angular(f, xi, gamma, bd_openings, bd_samples,
                                                        bd_tol, !normality.diverging);
    auto args = grid_args(bd_o);
    args.push_back("--xi=" + bd_xi);
    if (!bd_path.empty()) args.push_back("--path=" + bd_path);
    for (double psi : bd_openings) args.push_back("--openings=" + num(psi));
    args.push_back("--samples=" + std::to_string(bd_samples));
    args.push_back("--probe-tol=" + num(bd_tol));
    emit("boundary", std::move(args), bd_o.seed, hmtk::to_report(report), bd_o);
  });

  // lappan --------------------------------------------------------------
  CommonOpts lp_o;
  std::string lp_pairs;
  auto* lp_cmd = app.add_subcommand("lappan", "image-distance test on shrinking point pairs");
  add_common(lp_cmd, lp_o, false);
  lp_cmd->add_option("--pairs", lp_pairs, "CSV z_re,z_im,w_re,w_im")->required();
  lp_cmd->callback([&] {
    const hmtk::HarmonicMap f = hmtk::resolve_map(lp_o.map);
    const auto pairs = hmtk::read_pairs_csv(lp_pairs);
    const auto verdict = hmtk::lappan_pair_test(f, pairs);
    emit("lappan",
         {"--map=" + lp_o.map, "--pairs=" + lp_pairs, "--seed=" + std::to_string(lp_o.seed)},
         lp_o.seed, hmtk::to_report(verdict), lp_o);
  });

  // catalog -------------------------------------------------------------
  CommonOpts cat_o;
  auto* cat_cmd = app.add_subcommand("catalog", "built-in example mappings");
  cat_cmd->require_subcommand(1);
  auto* cat_list = cat_cmd->add_subcommand("list", "list entries with declared attributes");
  cat_list->add_option("--json", cat_o.json_path, "also write the JSON report here");
  cat_list->callback([&] {
    emit("catalog list", {}, 0, hmtk::catalog_report(), cat_o);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const hmtk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
  std::cerr << "wall_time_ms " << ms << "\n";
  return 0;
}
