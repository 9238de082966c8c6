#pragma once

#include <optional>
#include <vector>

#include "hmtk/harmonic.hpp"

namespace hmtk {

// One rescaled view F(zeta) = f(zc + rho * zeta), sampled on a square lattice
// of odd side covering [-frame_radius, frame_radius]^2. Lattice nodes outside
// the sampling disk |zeta| <= frame_radius, or whose preimage leaves the unit
// disk, are masked out. The odd side guarantees zeta = 0 is a node; the
// zoomed map's spherical derivative there, rho * f#(zc), is stored exactly.
struct ZoomFrame {
  DiskPoint center;
  double scale = 1.0;         // rho
  double big_r = 1.0;         // (1 - |center|) / rho
  double frame_radius = 1.0;
  int side = 3;
  std::vector<std::optional<Complex>> samples;  // row-major, side * side
  double f_sharp_0 = 0.0;

  Complex lattice(int i, int j) const;  // zeta at node (i, j), i indexing rows (imag axis)
  const std::optional<Complex>& at(int i, int j) const;
};

ZoomFrame zoom(const HarmonicMap& f, const DiskPoint& zc, double rho, double frame_radius,
               int mesh);

struct BlowupEntry {
  double r = 0.0;      // schedule radius r_n
  DiskPoint z;         // argmax z_n
  double M = 0.0;      // max of (1 - |z|^2 / r_n^2) f#(z) over |z| < r_n
  double rho = 0.0;    // 1 / f#(z_n)
};

struct BlowupSequence {
  std::vector<BlowupEntry> entries;
};

// Runs the blow-up selection sweep along the schedule. Each radius maximizes
// (1 - |z|^2 / r_n^2) f#(z) on the grid confined to |z| < r_n (and to
// cfg.max_radius), then records the witness and rho_n = 1 / f#(z_n).
BlowupSequence extract_blowup(const HarmonicMap& f, const std::vector<double>& r_schedule,
                              const GridConfig& cfg);

struct ProbeVerdict {
  bool converging = false;
  bool nonconstant = false;
  double sup_chi = 0.0;  // worst pairwise sup over the compared frames
};

// Cauchy test in sup chordal distance over the last three frames, plus the
// nonconstancy check F#(0) >= 0.5 on the final frame. Frames must share side
// and frame_radius.
ProbeVerdict convergence_probe(const std::vector<ZoomFrame>& frames, double tol);

}  // namespace hmtk
