#include "hmtk/grid.hpp"

#include <cmath>
#include <limits>

#include "hmtk/errors.hpp"

namespace hmtk {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void GridConfig::validate() const {
  if (!(max_radius > 0.0) || !(max_radius < 1.0))
    throw DomainError("GridConfig: max_radius must lie in (0, 1)");
  if (initial_mesh < 8) throw DomainError("GridConfig: initial_mesh must be >= 8");
  if (refine_depth < 0) throw DomainError("GridConfig: refine_depth must be >= 0");
  if (refine_factor < 2) throw DomainError("GridConfig: refine_factor must be >= 2");
  if (!(tol > 0.0)) throw DomainError("GridConfig: tol must be positive");
  if (max_evals < 1) throw DomainError("GridConfig: max_evals must be >= 1");
}

SweepOutcome maximize_on_disk(const DiskObjective& objective, const GridConfig& cfg,
                              double radius_cap, const SampleRecorder* recorder) {
  cfg.validate();
  if (!(radius_cap > 0.0) || !(radius_cap < 1.0))
    throw DomainError("maximize_on_disk: radius cap must lie in (0, 1)");

  SweepOutcome out;
  out.best = -std::numeric_limits<double>::infinity();
  double best_r = 0.0, best_theta = 0.0;

  auto sample = [&](double r, double theta) {
    if (r < 0.0) r = 0.0;
    if (r > radius_cap) r = radius_cap;
    if (++out.evals > cfg.max_evals)
      throw BudgetExceeded("grid maximizer: eval budget exhausted at " +
                           std::to_string(cfg.max_evals));
    const Complex z = std::polar(r, r == 0.0 ? 0.0 : theta);
    const auto v = objective(z);
    if (!v) return;
    out.any_feasible = true;
    if (recorder && *recorder) (*recorder)(z, *v);
    // Strict improvement wins; exact ties go to the lexicographically smaller
    // polar coordinates so reruns stay deterministic.
    const bool better =
        *v > out.best ||
        (*v == out.best && (r < best_r || (r == best_r && theta < best_theta)));
    if (better) {
      out.best = *v;
      out.witness = z;
      best_r = r;
      best_theta = theta == 0.0 && r == 0.0 ? 0.0 : theta;
    }
  };

  const int mesh = cfg.initial_mesh;
  const double radial_step = radius_cap / (mesh + 1);
  const double angular_step = 2.0 * kPi / mesh;

  sample(0.0, 0.0);
  for (int i = 1; i <= mesh; ++i) {
    const double r = radius_cap * i / (mesh + 1);
    for (int k = 0; k < mesh; ++k) sample(r, k * angular_step);
  }
  out.per_level.push_back(out.any_feasible ? out.best : 0.0);

  double window_r = radial_step;
  double window_theta = angular_step;
  bool all_rounds_improved = cfg.refine_depth > 0;
  for (int d = 1; d <= cfg.refine_depth; ++d) {
    window_r /= cfg.refine_factor;
    window_theta /= cfg.refine_factor;
    const double r0 = best_r, theta0 = best_theta;
    const double prev = out.best;
    for (int i = -2; i <= 2; ++i) {
      for (int k = -2; k <= 2; ++k) {
        if (i == 0 && k == 0) continue;
        sample(r0 + window_r * i / 2.0, theta0 + window_theta * k / 2.0);
      }
    }
    out.depth_used = d;
    const double gain = out.any_feasible ? out.best - prev : 0.0;
    if (!(gain > cfg.tol)) all_rounds_improved = false;
    out.per_level.push_back(out.any_feasible ? out.best : 0.0);
  }

  if (!out.any_feasible) {
    out.best = 0.0;
    out.witness = Complex(0.0, 0.0);
    out.diverging = false;
    return out;
  }

  out.diverging = all_rounds_improved && std::abs(out.witness) >= 0.95 * radius_cap;
  return out;
}

}  // namespace hmtk
