#include "hmtk/normality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hmtk/errors.hpp"

namespace hmtk {

namespace {

constexpr double kPi = 3.14159265358979323846;

NormalityEstimate from_sweep(const char* objective, const SweepOutcome& out) {
  NormalityEstimate est;
  est.objective = objective;
  est.lower_bound = out.any_feasible ? out.best : 0.0;
  est.witness = DiskPoint(out.witness);
  est.evals = out.evals;
  est.depth_used = out.depth_used;
  est.diverging = out.diverging;
  est.per_level = out.per_level;
  return est;
}

}  // namespace

NormalityEstimate normality_constant(const HarmonicMap& f, const GridConfig& cfg,
                                     const SampleRecorder* recorder) {
  auto objective = [&f](Complex z) -> std::optional<double> {
    const DiskPoint p(z);
    return (1.0 - std::norm(z)) * spherical_derivative(f, p);
  };
  return from_sweep("normality_constant", maximize_on_disk(objective, cfg, cfg.max_radius, recorder));
}

NormalityEstimate p_criterion(const HarmonicMap& f, double p, const GridConfig& cfg) {
  cfg.validate();
  if (!(p > 0.0)) throw DomainError("p_criterion: p must be positive");

  const double cap = cfg.max_radius;
  const double e_cross = 1.0 - 2.0 / p;
  const double e_edge = 1.0 / p;

  long evals = 0;
  double best = 0.0;
  Complex best_z(0.0, 0.0), best_w(0.0, 0.0);

  auto value_of = [&](Complex z) { return eval_f(f, DiskPoint(z)); };

  // One budget unit per pair, matching the single-point sweep accounting.
  auto consider_cached = [&](Complex z, Complex w, Complex fz, Complex fw) {
    if (z == w) return;
    if (++evals > cfg.max_evals)
      throw BudgetExceeded("p-criterion: eval budget exhausted at " +
                           std::to_string(cfg.max_evals));
    const double gap = std::abs(z - w);
    const double chi =
        chordal_distance(ExtendedComplex::from_value(fz), ExtendedComplex::from_value(fw));
    const double cross = std::abs(1.0 - std::conj(w) * z);
    const double v = chi / gap * std::pow(cross, e_cross) *
                     std::pow(1.0 - std::norm(w), e_edge) * std::pow(1.0 - std::norm(z), e_edge);
    if (v > best) {
      best = v;
      best_z = z;
      best_w = w;
    }
  };
  auto clamp_cap = [&](Complex z) {
    const double r = std::abs(z);
    return r > cap ? z * (cap / r) : z;
  };
  auto consider = [&](Complex z, Complex w) {
    z = clamp_cap(z);
    w = clamp_cap(w);
    if (z == w) return;
    consider_cached(z, w, value_of(z), value_of(w));
  };

  const int mesh = cfg.initial_mesh;
  const double radial_step = cap / (mesh + 1);
  const double angular_step = 2.0 * kPi / mesh;

  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(mesh) * mesh + 1);
  pts.emplace_back(0.0, 0.0);
  for (int i = 1; i <= mesh; ++i) {
    const double r = cap * i / (mesh + 1);
    for (int k = 0; k < mesh; ++k) pts.push_back(std::polar(r, k * angular_step));
  }
  std::vector<Complex> fpts(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) fpts[i] = value_of(pts[i]);

  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      consider_cached(pts[i], pts[j], fpts[i], fpts[j]);

  // Near-diagonal probes: the sup frequently lives at z -> w, where the
  // functional tends to (1 - |w|^2) f#(w) regardless of p.
  auto probe_diagonal = [&](Complex z, double base_scale, int finest) {
    const Complex radial = std::abs(z) == 0.0 ? Complex(1.0, 0.0) : z / std::abs(z);
    const Complex dirs[3] = {radial, radial * Complex(0.0, 1.0),
                             radial * std::polar(1.0, kPi / 4.0)};
    for (int j = 1; j <= finest; ++j) {
      const double s = base_scale * std::pow(2.0, -j);
      for (const Complex& dir : dirs) consider(z, z + s * dir);
    }
  };
  for (const Complex& z : pts) probe_diagonal(z, radial_step, 10);

  NormalityEstimate est;
  est.objective = "p_criterion";
  est.per_level.push_back(best);

  auto shifted = [&](Complex z, double dr, double dt) {
    double r = std::abs(z);
    double theta = r == 0.0 ? 0.0 : std::arg(z);
    r = std::clamp(r + dr, 0.0, cap);
    return std::polar(r, theta + dt);
  };

  double window_r = radial_step;
  double window_t = angular_step;
  bool all_rounds_improved = cfg.refine_depth > 0;
  for (int d = 1; d <= cfg.refine_depth; ++d) {
    window_r /= cfg.refine_factor;
    window_t /= cfg.refine_factor;
    const Complex z0 = best_z, w0 = best_w;
    const double prev = best;
    for (int iz = -2; iz <= 2; ++iz)
      for (int kz = -2; kz <= 2; ++kz) {
        const Complex zc = shifted(z0, window_r * iz / 2.0, window_t * kz / 2.0);
        for (int iw = -2; iw <= 2; ++iw)
          for (int kw = -2; kw <= 2; ++kw) {
            if (iz == 0 && kz == 0 && iw == 0 && kw == 0) continue;
            consider(zc, shifted(w0, window_r * iw / 2.0, window_t * kw / 2.0));
          }
      }
    // Shrink the gap of the running best pair toward the diagonal, and refresh
    // the diagonal probes at the current scale around both endpoints.
    for (int j = 1; j <= 10; ++j) {
      const double t = std::pow(2.0, -j);
      consider(z0, z0 + (w0 - z0) * t);
      consider(w0 + (z0 - w0) * t, w0);
    }
    probe_diagonal(z0, window_r, 6);
    probe_diagonal(w0, window_r, 6);

    est.depth_used = d;
    if (!(best - prev > cfg.tol)) all_rounds_improved = false;
    est.per_level.push_back(best);
  }

  est.lower_bound = best;
  est.witness = DiskPoint(best_z);
  est.co_witness = DiskPoint(best_w);
  est.evals = evals;
  est.diverging = all_rounds_improved &&
                  std::max(std::abs(best_z), std::abs(best_w)) >= 0.95 * cap;
  return est;
}

namespace {

struct NewtonResult {
  bool converged = false;
  Complex root{0.0, 0.0};
};

// One damped Newton run for h(z) + conj(g(z)) = target. The linearization
// h'(z) d + conj(g'(z)) conj(d) = -F is solved exactly via its conjugate pair;
// the determinant is the Jacobian |h'|^2 - |g'|^2.
NewtonResult newton_from(const HarmonicMap& f, Complex target, Complex start, double cap,
                         const SolveConfig& sc) {
  Complex z = start;
  Complex F = eval_f(f, DiskPoint(z)) - target;
  double res = std::abs(F);
  for (int it = 0; it < sc.max_iter; ++it) {
    if (res <= sc.residual_tol) return {true, z};
    const Complex hp = f.dh().eval(z);
    const Complex gp = f.dg().eval(z);
    const double det = std::norm(hp) - std::norm(gp);
    if (!(std::abs(det) > 1e-300)) return {};
    const Complex step = (std::conj(gp) * std::conj(F) - std::conj(hp) * F) / det;
    double lambda = 1.0;
    bool accepted = false;
    for (int bt = 0; bt <= sc.max_backtracks; ++bt) {
      const Complex cand = z + lambda * step;
      if (std::abs(cand) < cap) {
        const Complex Fc = eval_f(f, DiskPoint(cand)) - target;
        if (std::abs(Fc) < res) {
          z = cand;
          F = Fc;
          res = std::abs(Fc);
          accepted = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!accepted) return {};
  }
  return {std::abs(F) <= sc.residual_tol, z};
}

}  // namespace

FivePointReport five_point_test(const HarmonicMap& f, const std::array<ExtendedComplex, 5>& values,
                                const GridConfig& cfg, const SolveConfig& solver) {
  cfg.validate();
  if (solver.max_iter < 1 || !(solver.residual_tol > 0.0) || !(solver.dedup_radius > 0.0) ||
      solver.max_backtracks < 0)
    throw DomainError("five_point_test: bad solver config");
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j])
        throw DomainError("five_point_test: the five target values must be distinct");

  FivePointReport report;
  report.sense_preserving_ok = sense_preserving_sample(f, cfg).ok;

  const double cap = cfg.max_radius;
  std::vector<Complex> starts;
  starts.emplace_back(0.0, 0.0);
  const int mesh = cfg.initial_mesh;
  for (int i = 1; i <= mesh; ++i) {
    const double r = cap * i / (mesh + 1);
    for (int k = 0; k < mesh; ++k) starts.push_back(std::polar(r, k * 2.0 * kPi / mesh));
  }

  for (std::size_t vi = 0; vi < values.size(); ++vi) {
    FivePointValue& slot = report.values[vi];
    slot.value = values[vi];
    if (values[vi].is_infinity()) {
      // h + conj(g) is finite on the disk, so infinity has no preimage.
      slot.empty = true;
      continue;
    }
    const Complex target = values[vi].value();
    std::vector<Complex> roots;
    for (const Complex& start : starts) {
      const NewtonResult r = newton_from(f, target, start, cap, solver);
      if (!r.converged) continue;
      bool duplicate = false;
      for (const Complex& known : roots)
        if (std::abs(known - r.root) <= solver.dedup_radius) {
          duplicate = true;
          break;
        }
      if (!duplicate) roots.push_back(r.root);
    }
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    slot.preimages = roots;
    if (roots.empty()) {
      slot.empty = true;
      slot.stalled = true;  // starts ran, none converged
      continue;
    }
    double sup = 0.0;
    for (const Complex& z : roots)
      sup = std::max(sup, (1.0 - std::norm(z)) * spherical_derivative(f, DiskPoint(z)));
    slot.sup = sup;
  }
  return report;
}

NormalityEstimate derivative_growth(const HarmonicMap& f, int n, double K, const GridConfig& cfg,
                                    const SampleRecorder* recorder) {
  if (n < 1) throw DomainError("derivative_growth: n must be >= 1");
  if (!(K > 0.0)) throw DomainError("derivative_growth: K must be positive");
  const AnalyticExpr hn = f.h().nth_derivative(n);
  const AnalyticExpr gn = f.g().nth_derivative(n);
  auto objective = [&](Complex z) -> std::optional<double> {
    const Complex fz = eval_f(f, DiskPoint(z));
    if (!(std::abs(fz) <= K)) return std::nullopt;
    return std::pow(1.0 - std::norm(z), n) * (std::abs(hn.eval(z)) + std::abs(gn.eval(z)));
  };
  return from_sweep("derivative_growth", maximize_on_disk(objective, cfg, cfg.max_radius, recorder));
}

std::int64_t bk(int k, int n) {
  if (k < 1 || k > n) throw DomainError("bk: need 1 <= k <= n");
  // Row k-1 holds B_{k-1}(j) for j = 0..n (entries below j = k-1 unused).
  std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 1);  // B_1(j) = 1
  for (int level = 2; level <= k; ++level) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(n) + 1, 0);
    for (int j = level; j <= n; ++j) {
      std::int64_t acc = 0;
      for (int m = level - 1; m <= j - 1; ++m)
        if (__builtin_add_overflow(acc, row[m], &acc))
          throw DomainError("bk: value exceeds 64-bit range");
      next[j] = acc;
    }
    row.swap(next);
  }
  return row[n];
}

LappanVerdict lappan_pair_test(const HarmonicMap& f,
                               const std::vector<std::pair<DiskPoint, DiskPoint>>& pairs,
                               const LappanOptions& options) {
  if (pairs.empty()) throw DomainError("lappan_pair_test: need at least one pair");
  if (!(options.tail_fraction > 0.0) || !(options.tail_fraction <= 1.0) ||
      !(options.tol_factor > 0.0))
    throw DomainError("lappan_pair_test: bad options");

  std::vector<double> rho(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    rho[i] = hyperbolic_distance(pairs[i].first, pairs[i].second);
  for (std::size_t i = 1; i < rho.size(); ++i)
    if (rho[i] > rho[i - 1] + 1e-12)
      throw DomainError("lappan_pair_test: hyperbolic distances must be nonincreasing");
  if (!(rho.back() < 1e-3))
    throw DomainError("lappan_pair_test: final hyperbolic distance must be below 1e-3");

  std::vector<double> chi(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ExtendedComplex a = ExtendedComplex::from_value(eval_f(f, pairs[i].first));
    const ExtendedComplex b = ExtendedComplex::from_value(eval_f(f, pairs[i].second));
    chi[i] = chordal_distance(a, b);
  }

  LappanVerdict verdict;
  verdict.first_chi = chi.front();
  const double threshold = options.tol_factor * (chi.front() + 1.0);
  const std::size_t tail_len = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(options.tail_fraction * pairs.size())));
  const std::size_t tail_start = pairs.size() - tail_len;
  for (std::size_t i = tail_start; i < pairs.size(); ++i) {
    verdict.tail_max = std::max(verdict.tail_max, chi[i]);
    if (chi[i] >= threshold && !verdict.witness_index) verdict.witness_index = i;
  }
  verdict.consistent = !verdict.witness_index.has_value();
  return verdict;
}

}  // namespace hmtk
