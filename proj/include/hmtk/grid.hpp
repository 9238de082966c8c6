#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hmtk/sphere.hpp"

namespace hmtk {

// Controls the adaptive polar-grid maximizers (normality constant, p-criterion,
// derivative growth, blow-up extraction) and grid-sampled checks.
struct GridConfig {
  double max_radius = 0.999;  // samples stay inside |z| <= max_radius
  int initial_mesh = 32;      // radii count; also the angular division count
  int refine_depth = 4;       // local refinement rounds around the running argmax
  int refine_factor = 2;      // window shrink factor per round
  double tol = 1e-3;          // improvement threshold feeding the diverging flag
  long max_evals = 2000000;   // hard eval budget (BudgetExceeded once hit)
  unsigned long rng_seed = 0; // seed for the few sampled checks that draw randomly

  void validate() const;  // throws DomainError when out of range
};

struct SweepOutcome {
  double best = 0.0;
  Complex witness{0.0, 0.0};
  long evals = 0;
  int depth_used = 0;
  bool diverging = false;
  std::vector<double> per_level;  // best value after the initial sweep and each round
  bool any_feasible = false;
};

// Objective evaluated on disk points; nullopt marks an infeasible sample
// (skipped, still billed against the budget).
using DiskObjective = std::function<std::optional<double>(Complex)>;

// Optional sink receiving every (z, value) sample pair, e.g. for CSV dumps.
using SampleRecorder = std::function<void(Complex, double)>;

// Maximizes the objective over |z| <= radius_cap: a uniform polar sweep
// (center point plus initial_mesh radii at radius_cap * i / (initial_mesh+1),
// each with initial_mesh angles), then refine_depth rounds of a 5x5 local
// polar window around the running argmax. The window shrinks by refine_factor
// per round, so the radial reach approaches radius_cap geometrically but
// never passes it. Argmax ties break toward lexicographically smaller
// (radius, angle). Deterministic for fixed config.
SweepOutcome maximize_on_disk(const DiskObjective& objective, const GridConfig& cfg,
                              double radius_cap, const SampleRecorder* recorder = nullptr);

}  // namespace hmtk
