#pragma once

#include <vector>

#include "hmtk/harmonic.hpp"

namespace hmtk {

// Outcome of a boundary-limit probe. Limits are estimates from a geometric
// tail of samples, never certificates: "value" is meaningful only when
// divergent is false, which requires the chordal diameter of the tail
// (last quarter of the samples) to stay below the requested tolerance.
struct LimitProbe {
  bool divergent = true;
  ExtendedComplex value;
  double tail_spread = 0.0;
  long samples_used = 0;
};

// Limit of f along gamma, which must end at a point of the unit circle and
// otherwise stay interior. Samples accumulate geometrically toward the
// endpoint (arclength fractions 1 - 2^-k), with radii capped at 1 - 1e-12.
// The point at infinity is a first-class limit value.
LimitProbe asymptotic_value(const HarmonicMap& f, const PathPolyline& gamma, int n_samples,
                            double tol);

// asymptotic_value along the radius from 0 to xi (|xi| = 1).
LimitProbe radial_limit(const HarmonicMap& f, Complex xi, int n_samples, double tol);

// Probes rays z = xi (1 - s e^{i phi}) inside every requested Stolz opening
// (phi = 0, +-opening/2, +-0.9 opening). Returns the common value when all
// rays converge and agree within tol in chordal distance; divergent otherwise.
LimitProbe angular_limit(const HarmonicMap& f, Complex xi, const std::vector<double>& openings,
                         int n_samples, double tol);

struct AgreementReport {
  bool agrees = false;
  LimitProbe asymptotic;
  LimitProbe angular;
  bool normality_evidence = false;  // caller-supplied; recorded, not inferred
};

// Compares the path limit with the Stolz limit at the path's endpoint. The
// implication "asymptotic value => same angular limit" only holds under a
// normality hypothesis, which is not finitely certifiable; the caller passes
// whatever evidence it has and the report carries it verbatim.
AgreementReport asymptotic_equals_angular(const HarmonicMap& f, Complex xi,
                                          const PathPolyline& gamma,
                                          const std::vector<double>& openings, int n_samples,
                                          double tol, bool normality_evidence);

}  // namespace hmtk
