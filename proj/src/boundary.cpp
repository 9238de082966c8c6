#include "hmtk/boundary.hpp"

#include <cmath>
#include <string>

#include "hmtk/errors.hpp"

namespace hmtk {

namespace {

ExtendedComplex capped_eval(const HarmonicMap& f, Complex z) {
  const double r = std::abs(z);
  const double cap = 1.0 - 1e-12;
  if (r > cap) z *= cap / r;
  return ExtendedComplex::from_value(eval_f(f, DiskPoint(z)));
}

LimitProbe probe_from_tail(const std::vector<ExtendedComplex>& vals, double tol) {
  LimitProbe probe;
  probe.samples_used = static_cast<long>(vals.size());
  const std::size_t tail_len = std::max<std::size_t>(1, (vals.size() + 3) / 4);
  const std::size_t start = vals.size() - tail_len;
  for (std::size_t i = start; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j)
      probe.tail_spread = std::max(probe.tail_spread, chordal_distance(vals[i], vals[j]));
  if (probe.tail_spread < tol) {
    probe.divergent = false;
    const ExtendedComplex candidate = vals.back();
    // chi(w, inf) = 1/sqrt(1+|w|^2): the dual smallness test decides between a
    // finite limit and the point at infinity.
    probe.value = chordal_distance(candidate, ExtendedComplex::infinity()) < tol
                      ? ExtendedComplex::infinity()
                      : candidate;
  }
  return probe;
}

Complex unit_direction(Complex xi) {
  const double r = std::abs(xi);
  if (std::abs(r - 1.0) > 1e-9)
    throw GeometryError("boundary probe: xi must lie on the unit circle, got |xi| = " +
                        std::to_string(r));
  return xi / r;
}

void check_probe_args(int n_samples, double tol) {
  if (n_samples < 8) throw DomainError("boundary probe: need at least 8 samples");
  if (!(tol > 0.0)) throw DomainError("boundary probe: tol must be positive");
}

}  // namespace

LimitProbe asymptotic_value(const HarmonicMap& f, const PathPolyline& gamma, int n_samples,
                            double tol) {
  check_probe_args(n_samples, tol);
  unit_direction(gamma.vertices().back());  // endpoint must sit on the circle

  const double len = gamma.length();
  std::vector<ExtendedComplex> vals;
  vals.reserve(n_samples);
  for (int k = 1; k <= n_samples; ++k)
    vals.push_back(capped_eval(f, gamma.point_at(len * (1.0 - std::pow(2.0, -k)))));
  return probe_from_tail(vals, tol);
}

LimitProbe radial_limit(const HarmonicMap& f, Complex xi, int n_samples, double tol) {
  const Complex dir = unit_direction(xi);
  return asymptotic_value(f, PathPolyline({Complex(0.0, 0.0), dir}), n_samples, tol);
}

LimitProbe angular_limit(const HarmonicMap& f, Complex xi, const std::vector<double>& openings,
                         int n_samples, double tol) {
  check_probe_args(n_samples, tol);
  if (openings.empty()) throw DomainError("angular_limit: need at least one opening");
  for (double psi : openings)
    if (!(psi > 0.0) || !(psi < 1.5707963267948966))
      throw DomainError("angular_limit: openings must lie in (0, pi/2)");
  const Complex dir = unit_direction(xi);

  LimitProbe overall;
  bool all_converged = true;
  std::vector<ExtendedComplex> candidates;
  for (double psi : openings) {
    const double phis[5] = {0.0, psi / 2.0, -psi / 2.0, 0.9 * psi, -0.9 * psi};
    for (double phi : phis) {
      const double s0 = 0.8 * std::cos(phi);
      std::vector<ExtendedComplex> vals;
      vals.reserve(n_samples);
      for (int k = 1; k <= n_samples; ++k) {
        const double s = s0 * std::pow(2.0, -k);
        vals.push_back(capped_eval(f, dir * (1.0 - s * std::polar(1.0, phi))));
      }
      const LimitProbe ray = probe_from_tail(vals, tol);
      overall.samples_used += ray.samples_used;
      overall.tail_spread = std::max(overall.tail_spread, ray.tail_spread);
      if (ray.divergent)
        all_converged = false;
      else
        candidates.push_back(ray.value);
    }
  }
  if (all_converged) {
    double disagreement = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        disagreement = std::max(disagreement, chordal_distance(candidates[i], candidates[j]));
    overall.tail_spread = std::max(overall.tail_spread, disagreement);
    if (disagreement < tol) {
      overall.divergent = false;
      overall.value = candidates.front();
    }
  }
  return overall;
}

AgreementReport asymptotic_equals_angular(const HarmonicMap& f, Complex xi,
                                          const PathPolyline& gamma,
                                          const std::vector<double>& openings, int n_samples,
                                          double tol, bool normality_evidence) {
  AgreementReport report;
  report.normality_evidence = normality_evidence;
  report.asymptotic = asymptotic_value(f, gamma, n_samples, tol);
  report.angular = angular_limit(f, xi, openings, n_samples, tol);
  report.agrees = !report.asymptotic.divergent && !report.angular.divergent &&
                  chordal_distance(report.asymptotic.value, report.angular.value) < tol;
  return report;
}

}  // namespace hmtk
