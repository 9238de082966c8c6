#pragma once

#include <utility>
#include <vector>

#include "hmtk/harmonic.hpp"

namespace hmtk {

// kappa = alpha * beta / sin(beta) for alpha > 0, 0 < beta < pi.
double kappa(double alpha, double beta);

// b(t) = t * exp(-(k/2)(t + 1/t)). Increasing on (0, t0), decreasing after.
double b_function(double t, double k);

// t0 = (1 + sqrt(1 + k^2)) / k, the maximizer of b(., k).
double t_zero(double k);

// delta0 = b(t0) in closed form: (1/k)(1 + sqrt(1 + k^2)) exp(-sqrt(1 + k^2)).
double delta_zero(double k);

// Smallest nonnegative root of b(eta) = delta, by bisection on [0, t0] to
// |b(eta) - delta| <= 1e-12. delta = 0 returns 0 exactly. Throws DeltaTooLarge
// (carrying delta0) when delta >= delta0.
double solve_eta(double delta, double k);

struct LensConfig {
  double alpha = 1.0;  // assumed bound on (1 - |z|^2) f#
  double beta = 1.5707963267948966;
  double delta = 0.1;  // assumed bound of |f| on the free boundary part

  void validate() const;
};

// A Jordan region given by its boundary split in two: the part where the
// smallness hypothesis is imposed (free_boundary) and the exceptional arc
// where it is not (arc_boundary). Together they must close up to a loop.
struct Region {
  PathPolyline free_boundary;
  PathPolyline arc_boundary;
};

struct MaxPrincipleReport {
  double kappa = 0.0;
  double t0 = 0.0;
  double delta0 = 0.0;
  double eta = 0.0;
  bool hypothesis_ok = false;
  bool conclusion_ok = false;
  Complex worst_boundary_point{0.0, 0.0};  // on the free part
  double worst_boundary_value = 0.0;
  Complex worst_interior_point{0.0, 0.0};
  double worst_interior_value = 0.0;
  double normality_estimate = 0.0;  // sampled lower bound fed into the hypothesis
  long interior_samples = 0;
};

// Checks both sides of the quantitative maximum principle by sampling:
// hypothesis = (max |f| on the free boundary <= delta) and (normality estimate
// <= alpha); conclusion = (max |f| on an interior grid + rejection sample
// <= eta + 1e-9). Sampled maxima are lower bounds, so a conclusion failure is
// a real violation while a pass is evidence, not proof.
MaxPrincipleReport verify_max_principle(const HarmonicMap& f, const Region& region,
                                        const LensConfig& lens, const GridConfig& cfg);

struct LensPolygon {
  PathPolyline free_part;  // diameter segment
  PathPolyline arc_part;   // polygonal approximation of the circular arc
  double chord_error = 0.0;
};

// Lens of angle beta: the region between the segment [-1, 1] and the circular
// arc through -1, 1 with apex i*tan(beta/2), scaled by shrink so its closure
// stays inside the disk. The arc is approximated by `segments` chords; the
// reported chord_error bounds the sagitta.
LensPolygon lens_polygon(double beta, int segments, double shrink);

struct CollapseVerdict {
  bool consistent = true;
  bool arc_collapses = false;    // tail of arc maxima below threshold
  bool disks_collapse = false;   // tail of disk maxima below threshold
  bool normality_warning = false;  // some family member's estimate is diverging
  double uniform_bound = 0.0;      // max sampled normality estimate over the family
  std::vector<double> arc_max;   // m_n
  std::vector<double> disk_max;  // M_n
};

// Desk-scale surrogate of the collapsing-arcs statement: if the arc maxima
// m_n trend to 0 then the local maxima M_n on the test disks must too.
// Vacuously consistent when the arc maxima do not collapse.
CollapseVerdict sequence_collapse_test(const std::vector<HarmonicMap>& fs,
                                       const std::vector<PathPolyline>& arcs, double gamma,
                                       const std::vector<std::pair<Complex, double>>& test_disks,
                                       const GridConfig& cfg);

}  // namespace hmtk
