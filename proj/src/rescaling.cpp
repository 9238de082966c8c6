#include "hmtk/rescaling.hpp"

#include <cmath>
#include <string>

#include "hmtk/errors.hpp"

namespace hmtk {

Complex ZoomFrame::lattice(int i, int j) const {
  const double step = side > 1 ? 2.0 * frame_radius / (side - 1) : 0.0;
  return Complex(-frame_radius + j * step, -frame_radius + i * step);
}

const std::optional<Complex>& ZoomFrame::at(int i, int j) const {
  return samples[static_cast<std::size_t>(i) * side + j];
}

ZoomFrame zoom(const HarmonicMap& f, const DiskPoint& zc, double rho, double frame_radius,
               int mesh) {
  if (!(rho > 0.0)) throw DomainError("zoom: scale must be positive");
  if (!(frame_radius > 0.0)) throw DomainError("zoom: frame_radius must be positive");
  if (mesh < 3 || mesh % 2 == 0) throw DomainError("zoom: mesh must be odd and >= 3");
  const double big_r = (1.0 - zc.abs()) / rho;
  if (frame_radius > big_r * (1.0 + 1e-12))
    throw FrameEscapesDisk("zoom: frame_radius " + std::to_string(frame_radius) +
                           " exceeds (1-|zc|)/rho = " + std::to_string(big_r));

  ZoomFrame frame;
  frame.center = zc;
  frame.scale = rho;
  frame.big_r = big_r;
  frame.frame_radius = frame_radius;
  frame.side = mesh;
  frame.samples.assign(static_cast<std::size_t>(mesh) * mesh, std::nullopt);
  for (int i = 0; i < mesh; ++i) {
    for (int j = 0; j < mesh; ++j) {
      const Complex zeta = frame.lattice(i, j);
      if (std::abs(zeta) > frame_radius * (1.0 + 1e-12)) continue;
      const Complex z = zc.value() + rho * zeta;
      if (std::abs(z) >= 1.0 - 1e-12) continue;  // preimage grazes the circle
      frame.samples[static_cast<std::size_t>(i) * mesh + j] = eval_f(f, DiskPoint(z));
    }
  }
  frame.f_sharp_0 = rho * spherical_derivative(f, zc);
  return frame;
}

BlowupSequence extract_blowup(const HarmonicMap& f, const std::vector<double>& r_schedule,
                              const GridConfig& cfg) {
  cfg.validate();
  if (r_schedule.empty()) throw DomainError("extract_blowup: empty schedule");
  double prev = 0.0;
  for (double r : r_schedule) {
    if (!(r > prev) || !(r < 1.0))
      throw DomainError("extract_blowup: schedule must be strictly increasing in (0,1)");
    prev = r;
  }

  BlowupSequence seq;
  seq.entries.reserve(r_schedule.size());
  for (double r : r_schedule) {
    const double cap = std::min(r, cfg.max_radius);
    const double r2 = r * r;
    auto objective = [&](Complex z) -> std::optional<double> {
      const double zn = std::norm(z);
      if (!(zn < r2)) return std::nullopt;
      return (1.0 - zn / r2) * spherical_derivative(f, DiskPoint(z));
    };
    const SweepOutcome out = maximize_on_disk(objective, cfg, cap);
    const DiskPoint zn(out.witness);
    const double fsharp = spherical_derivative(f, zn);
    if (!(fsharp > 0.0))
      throw DomainError("extract_blowup: spherical derivative vanishes at the argmax");
    BlowupEntry entry;
    entry.r = r;
    entry.z = zn;
    entry.M = out.any_feasible ? out.best : 0.0;
    entry.rho = 1.0 / fsharp;
    seq.entries.push_back(entry);
  }
  return seq;
}

ProbeVerdict convergence_probe(const std::vector<ZoomFrame>& frames, double tol) {
  if (!(tol > 0.0)) throw DomainError("convergence_probe: tol must be positive");
  if (frames.size() < 3)
    throw DomainError("convergence_probe: need at least three frames");
  const int side = frames.front().side;
  const double radius = frames.front().frame_radius;
  for (const ZoomFrame& fr : frames) {
    if (fr.side != side || std::abs(fr.frame_radius - radius) > 1e-12)
      throw MeshMismatch("convergence_probe: frames disagree on lattice layout");
  }

  auto sup_chi = [](const ZoomFrame& a, const ZoomFrame& b) {
    double sup = 0.0;
    bool any = false;
    for (std::size_t n = 0; n < a.samples.size(); ++n) {
      if (!a.samples[n] || !b.samples[n]) continue;
      any = true;
      sup = std::max(sup, chordal_distance(ExtendedComplex::from_value(*a.samples[n]),
                                           ExtendedComplex::from_value(*b.samples[n])));
    }
    if (!any) throw MeshMismatch("convergence_probe: frames share no valid sample");
    return sup;
  };

  const std::size_t k = frames.size();
  ProbeVerdict verdict;
  verdict.sup_chi = std::max({sup_chi(frames[k - 3], frames[k - 2]),
                              sup_chi(frames[k - 2], frames[k - 1]),
                              sup_chi(frames[k - 3], frames[k - 1])});
  verdict.converging = verdict.sup_chi < tol;
  verdict.nonconstant = frames.back().f_sharp_0 >= 0.5;
  return verdict;
}

}  // namespace hmtk
