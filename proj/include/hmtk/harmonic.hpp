#pragma once

#include <optional>
#include <vector>

#include "hmtk/analytic.hpp"
#include "hmtk/grid.hpp"

namespace hmtk {

// Planar harmonic mapping f = h + conj(g) with h, g analytic on the disk.
// Convention: g vanishes at the normalization point z0 (|g(z0)| <= 1e-10,
// checked at construction). The first derivatives h', g' are derived once and
// cached; the object is immutable afterwards.
class HarmonicMap {
public:
  HarmonicMap(AnalyticExpr h, AnalyticExpr g, DiskPoint z0 = DiskPoint(Complex(0.0, 0.0)));

  // Skips the g(z0) convention check. Used by precompose() in its verbatim
  // mode, where the pulled-back g generally does not vanish at z0.
  static HarmonicMap unchecked(AnalyticExpr h, AnalyticExpr g,
                               DiskPoint z0 = DiskPoint(Complex(0.0, 0.0)));

  const AnalyticExpr& h() const { return h_; }
  const AnalyticExpr& g() const { return g_; }
  const AnalyticExpr& dh() const { return dh_; }
  const AnalyticExpr& dg() const { return dg_; }
  DiskPoint z0() const { return z0_; }

private:
  HarmonicMap(AnalyticExpr h, AnalyticExpr g, DiskPoint z0, bool check);

  AnalyticExpr h_, g_, dh_, dg_;
  DiskPoint z0_;
};

// Piecewise-linear path. All vertices interior to the disk except possibly
// the final one, which may sit on the closed boundary.
class PathPolyline {
public:
  explicit PathPolyline(std::vector<Complex> vertices);

  const std::vector<Complex>& vertices() const { return vertices_; }
  double length() const;
  Complex point_at(double arclength) const;  // clamped to [0, length]
  double diameter() const;                   // max pairwise vertex distance

private:
  std::vector<Complex> vertices_;
  std::vector<double> cumulative_;
};

Complex eval_f(const HarmonicMap& f, const DiskPoint& z);

// f#(z) = (|h'(z)| + |g'(z)|) / (1 + |f(z)|^2).
double spherical_derivative(const HarmonicMap& f, const DiskPoint& z);

// J_f(z) = |h'(z)|^2 - |g'(z)|^2.
double jacobian(const HarmonicMap& f, const DiskPoint& z);

struct SenseCheck {
  bool ok = true;
  std::optional<Complex> witness;  // first sample failing J_f > 0 and h' != 0
  long samples = 0;
};

// Sampled (not certified) sense-preservation check over the polar grid of
// cfg: J_f > 0 and h' != 0 at every sample.
SenseCheck sense_preserving_sample(const HarmonicMap& f, const GridConfig& cfg);

// f composed with an analytic self-map phi of the disk: H = h o phi,
// G = g o phi. Verbatim mode (renormalize = false, the default) keeps G
// untouched, so the g(z0) = 0 convention generally breaks; with
// renormalize = true G is shifted by the constant -g(phi(z0)) so the
// convention holds again at z0. phi is sampled-checked to map the disk into
// itself.
HarmonicMap precompose(const HarmonicMap& f, const AnalyticExpr& phi, bool renormalize = false);

// Composite-midpoint quadrature of the spherical length integral of f along
// gamma (which must stay interior to the disk). quad_points samples are
// distributed over the segments proportionally to their length.
double spherical_arc_length(const HarmonicMap& f, const PathPolyline& gamma, int quad_points);

struct ZeroOrder {
  int order = 0;        // min of the two branch indices (meaningful when !degenerate)
  bool degenerate = false;
  int h_index = 0;      // first nonvanishing Taylor index of h - h(z0); 0 = none found
  int g_index = 0;      // same for g - g(z0)
};

// Order of the zero of f at z0 from the leading Taylor indices of the two
// branches. "degenerate" flags equal indices with coefficients of equal
// modulus (relative gap <= 1e-9), where the order notion breaks down.
// Numerically fragile near that case by nature. Coefficients below 1e-9 in
// modulus count as vanishing.
ZeroOrder zero_order(const HarmonicMap& f, const DiskPoint& z0, int max_order);

// Solves h(z) = lambda* <=> f(z) = lambda for the constant-dilatation family
// f = h + conj(alpha h - alpha h0):
// lambda* = (lambda - conj(alpha lambda) + conj(alpha h0) - |alpha|^2 h0) / (1 - |alpha|^2).
Complex lambda_star(Complex lambda, Complex alpha, Complex h0);

}  // namespace hmtk
