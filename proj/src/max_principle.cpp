#include "hmtk/max_principle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hmtk/errors.hpp"
#include "hmtk/normality.hpp"

namespace hmtk {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double kappa(double alpha, double beta) {
  if (!(alpha > 0.0)) throw DomainError("kappa: alpha must be positive");
  if (!(beta > 0.0) || !(beta < kPi)) throw DomainError("kappa: beta must lie in (0, pi)");
  return alpha * beta / std::sin(beta);
}

double b_function(double t, double k) {
  if (!(t > 0.0)) throw DomainError("b_function: t must be positive");
  if (!(k > 0.0)) throw DomainError("b_function: kappa must be positive");
  return t * std::exp(-0.5 * k * (t + 1.0 / t));
}

double t_zero(double k) {
  if (!(k > 0.0)) throw DomainError("t_zero: kappa must be positive");
  return (1.0 + std::sqrt(1.0 + k * k)) / k;
}

double delta_zero(double k) {
  if (!(k > 0.0)) throw DomainError("delta_zero: kappa must be positive");
  const double s = std::sqrt(1.0 + k * k);
  return (1.0 + s) / k * std::exp(-s);
}

double solve_eta(double delta, double k) {
  if (!(delta >= 0.0)) throw DomainError("solve_eta: delta must be nonnegative");
  const double d0 = delta_zero(k);
  if (!(delta < d0)) throw DeltaTooLarge(delta, d0);
  if (delta == 0.0) return 0.0;  // b(t) -> 0 as t -> 0+

  double lo = 1e-300, hi = t_zero(k);
  // b is increasing on (0, t0], so the bracket is valid: b(lo) ~ 0 < delta < d0 = b(hi).
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double val = b_function(mid, k);
    if (std::abs(val - delta) <= 1e-12) return mid;
    (val < delta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void LensConfig::validate() const {
  if (!(alpha > 0.0)) throw DomainError("LensConfig: alpha must be positive");
  if (!(beta > 0.0) || !(beta < kPi)) throw DomainError("LensConfig: beta must lie in (0, pi)");
  if (!(delta >= 0.0)) throw DomainError("LensConfig: delta must be nonnegative");
}

namespace {

// Arclength-uniform samples including both endpoints.
std::vector<Complex> sample_polyline(const PathPolyline& path, int n) {
  std::vector<Complex> out;
  out.reserve(n + 1);
  const double len = path.length();
  for (int i = 0; i <= n; ++i) out.push_back(path.point_at(len * i / n));
  return out;
}

void require_inside_disk(const std::vector<Complex>& pts, const char* what) {
  for (const Complex& z : pts)
    if (std::abs(z) >= 1.0 - 1e-12)
      throw GeometryError(std::string(what) + ": closure leaves the unit disk near (" +
                          std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
}

// Joins the two boundary pieces into one closed loop, reversing the arc if
// its orientation opposes the free part.
std::vector<Complex> close_loop(const Region& region) {
  const auto& a = region.free_boundary.vertices();
  std::vector<Complex> b = region.arc_boundary.vertices();
  const double tol = 1e-6;
  if (std::abs(a.back() - b.back()) < tol && std::abs(b.front() - a.front()) < tol)
    std::reverse(b.begin(), b.end());
  if (!(std::abs(a.back() - b.front()) < tol && std::abs(b.back() - a.front()) < tol))
    throw GeometryError("region boundary pieces do not close up into a loop");
  std::vector<Complex> loop(a.begin(), a.end());
  loop.insert(loop.end(), b.begin() + 1, b.end() - 1);
  return loop;
}

bool point_in_loop(const std::vector<Complex>& loop, Complex p) {
  bool in = false;
  for (std::size_t i = 0, j = loop.size() - 1; i < loop.size(); j = i++) {
    const double yi = loop[i].imag(), yj = loop[j].imag();
    if ((yi > p.imag()) != (yj > p.imag())) {
      const double x =
          loop[j].real() + (loop[i].real() - loop[j].real()) * (p.imag() - yj) / (yi - yj);
      if (p.real() < x) in = !in;
    }
  }
  return in;
}

}  // namespace

MaxPrincipleReport verify_max_principle(const HarmonicMap& f, const Region& region,
                                        const LensConfig& lens, const GridConfig& cfg) {
  lens.validate();
  cfg.validate();

  MaxPrincipleReport report;
  report.kappa = kappa(lens.alpha, lens.beta);
  report.t0 = t_zero(report.kappa);
  report.delta0 = delta_zero(report.kappa);
  report.eta = solve_eta(lens.delta, report.kappa);  // throws DeltaTooLarge if delta >= delta0

  const std::vector<Complex> free_samples = sample_polyline(region.free_boundary, 512);
  const std::vector<Complex> arc_samples = sample_polyline(region.arc_boundary, 512);
  require_inside_disk(free_samples, "verify_max_principle");
  require_inside_disk(arc_samples, "verify_max_principle");

  for (const Complex& z : free_samples) {
    const double v = std::abs(eval_f(f, DiskPoint(z)));
    if (v > report.worst_boundary_value) {
      report.worst_boundary_value = v;
      report.worst_boundary_point = z;
    }
  }

  const NormalityEstimate est = normality_constant(f, cfg);
  report.normality_estimate = est.lower_bound;
  report.hypothesis_ok =
      report.worst_boundary_value <= lens.delta + 1e-12 && est.lower_bound <= lens.alpha + 1e-12;

  const std::vector<Complex> loop = close_loop(region);
  double xmin = 1.0, xmax = -1.0, ymin = 1.0, ymax = -1.0;
  for (const Complex& v : loop) {
    xmin = std::min(xmin, v.real());
    xmax = std::max(xmax, v.real());
    ymin = std::min(ymin, v.imag());
    ymax = std::max(ymax, v.imag());
  }

  auto consider_interior = [&](Complex p) {
    if (!point_in_loop(loop, p)) return;
    ++report.interior_samples;
    const double v = std::abs(eval_f(f, DiskPoint(p)));
    if (v > report.worst_interior_value) {
      report.worst_interior_value = v;
      report.worst_interior_point = p;
    }
  };
  const int grid = 48;
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j <= grid; ++j)
      consider_interior(Complex(xmin + (xmax - xmin) * i / grid, ymin + (ymax - ymin) * j / grid));
  std::mt19937 rng(static_cast<std::uint32_t>(cfg.rng_seed));
  std::uniform_real_distribution<double> ux(xmin, xmax), uy(ymin, ymax);
  for (int i = 0; i < 2000; ++i) {
    const double x = ux(rng), y = uy(rng);
    consider_interior(Complex(x, y));
  }

  report.conclusion_ok = report.worst_interior_value <= report.eta + 1e-9;
  return report;
}

LensPolygon lens_polygon(double beta, int segments, double shrink) {
  if (!(beta > 0.0) || !(beta < kPi)) throw DomainError("lens_polygon: beta must lie in (0, pi)");
  if (segments < 2) throw DomainError("lens_polygon: need at least 2 segments");
  if (!(shrink > 0.0) || !(shrink < 1.0)) throw DomainError("lens_polygon: shrink must lie in (0,1)");
  const double apex = shrink * std::tan(beta / 2.0);
  if (apex >= 1.0 - 1e-9)
    throw GeometryError("lens_polygon: apex " + std::to_string(apex) +
                        " reaches the unit circle; reduce beta or shrink");

  // Circle through -1 and 1 meeting the diameter at angle beta: center
  // -i cot(beta), radius 1/sin(beta); the arc runs over [pi/2-beta, pi/2+beta].
  const Complex center(0.0, -1.0 / std::tan(beta));
  const double radius = 1.0 / std::sin(beta);
  std::vector<Complex> arc;
  arc.reserve(segments + 1);
  for (int k = 0; k <= segments; ++k) {
    const double phi = kPi / 2.0 - beta + 2.0 * beta * k / segments;
    arc.push_back(shrink * (center + radius * std::polar(1.0, phi)));
  }
  arc.front() = Complex(shrink, 0.0);  // pin the shared endpoints exactly
  arc.back() = Complex(-shrink, 0.0);

  return LensPolygon{PathPolyline({Complex(-shrink, 0.0), Complex(shrink, 0.0)}),
                     PathPolyline(std::move(arc)),
                     shrink * radius * (1.0 - std::cos(beta / segments))};
}

CollapseVerdict sequence_collapse_test(const std::vector<HarmonicMap>& fs,
                                       const std::vector<PathPolyline>& arcs, double gamma,
                                       const std::vector<std::pair<Complex, double>>& test_disks,
                                       const GridConfig& cfg) {
  cfg.validate();
  if (!(gamma > 0.0)) throw DomainError("sequence_collapse_test: gamma must be positive");
  if (fs.empty() || fs.size() != arcs.size())
    throw DomainError("sequence_collapse_test: need one arc per map");
  for (std::size_t n = 0; n < arcs.size(); ++n)
    if (arcs[n].diameter() < gamma)
      throw GeometryError("sequence_collapse_test: arc " + std::to_string(n) +
                          " has diameter below gamma");
  for (const auto& [c, r] : test_disks) {
    if (!(r > 0.0) || std::abs(c) + r >= 1.0 - 1e-12)
      throw GeometryError("sequence_collapse_test: test disk leaves the unit disk");
  }

  std::vector<std::vector<Complex>> disk_samples;
  for (const auto& [c, r] : test_disks) {
    std::vector<Complex> pts;
    pts.push_back(c);
    for (int i = 1; i <= 12; ++i)
      for (int k = 0; k < 24; ++k)
        pts.push_back(c + std::polar(r * i / 12.0, k * kPi / 12.0));
    disk_samples.push_back(std::move(pts));
  }

  CollapseVerdict verdict;
  for (std::size_t n = 0; n < fs.size(); ++n) {
    const std::vector<Complex> arc_pts = sample_polyline(arcs[n], 256);
    require_inside_disk(arc_pts, "sequence_collapse_test");
    double m = 0.0;
    for (const Complex& z : arc_pts) m = std::max(m, std::abs(eval_f(fs[n], DiskPoint(z))));
    verdict.arc_max.push_back(m);

    double M = 0.0;
    for (const auto& pts : disk_samples)
      for (const Complex& z : pts) M = std::max(M, std::abs(eval_f(fs[n], DiskPoint(z))));
    verdict.disk_max.push_back(M);

    const NormalityEstimate est = normality_constant(fs[n], cfg);
    verdict.uniform_bound = std::max(verdict.uniform_bound, est.lower_bound);
    if (est.diverging) verdict.normality_warning = true;
  }

  const std::size_t count = fs.size();
  const std::size_t tail_len = std::max<std::size_t>(1, (count + 3) / 4);
  auto tail_below = [&](const std::vector<double>& v, double threshold) {
    for (std::size_t i = count - tail_len; i < count; ++i)
      if (!(v[i] < threshold)) return false;
    return true;
  };
  verdict.arc_collapses = tail_below(verdict.arc_max, 1e-3 * (verdict.arc_max.front() + 1.0));
  verdict.disks_collapse = tail_below(verdict.disk_max, 1e-3 * (verdict.disk_max.front() + 1.0));
  verdict.consistent = !verdict.arc_collapses || verdict.disks_collapse;
  return verdict;
}

}  // namespace hmtk
