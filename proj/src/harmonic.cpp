#include "hmtk/harmonic.hpp"

#include <algorithm>
#include <cmath>

namespace hmtk {

namespace {
constexpr double kPi = 3.14159265358979323846;

double factorial(int n) {
  double acc = 1.0;
  for (int k = 2; k <= n; ++k) acc *= k;
  return acc;
}
}  // namespace

HarmonicMap::HarmonicMap(AnalyticExpr h, AnalyticExpr g, DiskPoint z0, bool check)
    : h_(std::move(h)), g_(std::move(g)), dh_(h_.derivative()), dg_(g_.derivative()), z0_(z0) {
  if (check) {
    const Complex g0 = g_.eval(z0.value());
    if (std::abs(g0) > 1e-10)
      throw DomainError("HarmonicMap: |g(z0)| = " + std::to_string(std::abs(g0)) +
                        " violates the g(z0) = 0 convention");
  }
}

HarmonicMap::HarmonicMap(AnalyticExpr h, AnalyticExpr g, DiskPoint z0)
    : HarmonicMap(std::move(h), std::move(g), z0, true) {}

HarmonicMap HarmonicMap::unchecked(AnalyticExpr h, AnalyticExpr g, DiskPoint z0) {
  return HarmonicMap(std::move(h), std::move(g), z0, false);
}

PathPolyline::PathPolyline(std::vector<Complex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw GeometryError("PathPolyline: need at least two vertices");
  for (size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i + 1])
      throw GeometryError("PathPolyline: consecutive vertices must be distinct");
    if (std::abs(vertices_[i]) >= 1.0)
      throw GeometryError("PathPolyline: interior vertices must satisfy |z| < 1");
  }
  if (std::abs(vertices_.back()) > 1.0 + 1e-12)
    throw GeometryError("PathPolyline: final vertex must lie in the closed disk");
  cumulative_.resize(vertices_.size(), 0.0);
  for (size_t i = 1; i < vertices_.size(); ++i)
    cumulative_[i] = cumulative_[i - 1] + std::abs(vertices_[i] - vertices_[i - 1]);
}

double PathPolyline::length() const { return cumulative_.back(); }

Complex PathPolyline::point_at(double arclength) const {
  const double s = std::clamp(arclength, 0.0, length());
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  size_t i = std::min<size_t>(it - cumulative_.begin(), vertices_.size() - 1);
  if (i == 0) return vertices_.front();
  const double seg = cumulative_[i] - cumulative_[i - 1];
  const double t = seg > 0.0 ? (s - cumulative_[i - 1]) / seg : 0.0;
  return vertices_[i - 1] + t * (vertices_[i] - vertices_[i - 1]);
}

double PathPolyline::diameter() const {
  double d = 0.0;
  for (size_t i = 0; i < vertices_.size(); ++i)
    for (size_t j = i + 1; j < vertices_.size(); ++j)
      d = std::max(d, std::abs(vertices_[i] - vertices_[j]));
  return d;
}

Complex eval_f(const HarmonicMap& f, const DiskPoint& z) {
  return f.h().eval(z.value()) + std::conj(f.g().eval(z.value()));
}

double spherical_derivative(const HarmonicMap& f, const DiskPoint& z) {
  const Complex w = z.value();
  const double num = std::abs(f.dh().eval(w)) + std::abs(f.dg().eval(w));
  const Complex fv = f.h().eval(w) + std::conj(f.g().eval(w));
  return num / (1.0 + std::norm(fv));
}

double jacobian(const HarmonicMap& f, const DiskPoint& z) {
  const Complex w = z.value();
  return std::norm(f.dh().eval(w)) - std::norm(f.dg().eval(w));
}

SenseCheck sense_preserving_sample(const HarmonicMap& f, const GridConfig& cfg) {
  cfg.validate();
  SenseCheck res;
  auto check = [&](Complex z) {
    ++res.samples;
    const double jac = std::norm(f.dh().eval(z)) - std::norm(f.dg().eval(z));
    if (!(jac > 0.0) || f.dh().eval(z) == Complex(0.0, 0.0)) {
      res.ok = false;
      if (!res.witness) res.witness = z;
    }
  };
  check(Complex(0.0, 0.0));
  for (int i = 1; i <= cfg.initial_mesh && res.ok; ++i) {
    const double r = cfg.max_radius * i / (cfg.initial_mesh + 1);
    for (int k = 0; k < cfg.initial_mesh && res.ok; ++k)
      check(std::polar(r, 2.0 * kPi * k / cfg.initial_mesh));
  }
  return res;
}

HarmonicMap precompose(const HarmonicMap& f, const AnalyticExpr& phi, bool renormalize) {
  // Cheap sampled domain check: phi must keep the disk inside itself.
  for (int k = 0; k < 64; ++k) {
    const Complex z = std::polar(0.999, 2.0 * kPi * k / 64.0);
    if (std::abs(phi.eval(z)) >= 1.0)
      throw DomainError("precompose: phi leaves the unit disk at sample z = (" +
                        std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
  }
  AnalyticExpr H = AnalyticExpr::compose(f.h(), phi);
  AnalyticExpr G = AnalyticExpr::compose(f.g(), phi);
  if (renormalize) {
    const Complex shift = f.g().eval(phi.eval(f.z0().value()));
    G = AnalyticExpr::sum(G, AnalyticExpr::constant(-shift));
    return HarmonicMap(std::move(H), std::move(G), f.z0());
  }
  return HarmonicMap::unchecked(std::move(H), std::move(G), f.z0());
}

double spherical_arc_length(const HarmonicMap& f, const PathPolyline& gamma, int quad_points) {
  if (quad_points < 1) throw DomainError("spherical_arc_length: quad_points must be >= 1");
  for (const Complex& v : gamma.vertices())
    if (std::abs(v) >= 1.0 - 1e-12)
      throw GeometryError("spherical_arc_length: path must stay interior to the disk");

  const auto& vs = gamma.vertices();
  const double total = gamma.length();
  double acc = 0.0;
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    const double seg = std::abs(vs[i + 1] - vs[i]);
    const int n = std::max(1, static_cast<int>(std::lround(quad_points * seg / total)));
    const double h = seg / n;
    for (int k = 0; k < n; ++k) {
      const double t = (k + 0.5) / n;
      const Complex z = vs[i] + t * (vs[i + 1] - vs[i]);
      acc += spherical_derivative(f, DiskPoint(z)) * h;
    }
  }
  return acc;
}

ZeroOrder zero_order(const HarmonicMap& f, const DiskPoint& z0, int max_order) {
  if (max_order < 1) throw DomainError("zero_order: max_order must be >= 1");
  const Complex w = z0.value();
  const Complex fv = f.h().eval(w) + std::conj(f.g().eval(w));
  if (std::abs(fv) > 1e-10)
    throw NotAZero("zero_order: |f(z0)| = " + std::to_string(std::abs(fv)) +
                   " exceeds 1e-10");

  ZeroOrder res;
  Complex a_lead{}, b_lead{};
  AnalyticExpr dh = f.h();
  AnalyticExpr dg = f.g();
  for (int k = 1; k <= max_order; ++k) {
    dh = dh.derivative();
    dg = dg.derivative();
    const double fact = factorial(k);
    if (res.h_index == 0) {
      const Complex a = dh.eval(w) / fact;
      if (std::abs(a) > 1e-9) {
        res.h_index = k;
        a_lead = a;
      }
    }
    if (res.g_index == 0) {
      const Complex b = dg.eval(w) / fact;
      if (std::abs(b) > 1e-9) {
        res.g_index = k;
        b_lead = b;
      }
    }
    if (res.h_index && res.g_index) break;
  }
  if (!res.h_index && !res.g_index)
    throw OrderExceeded("zero_order: no nonvanishing Taylor coefficient up to order " +
                        std::to_string(max_order));

  if (res.h_index && res.g_index && res.h_index == res.g_index) {
    const double na = std::abs(a_lead), nb = std::abs(b_lead);
    if (std::abs(na - nb) <= 1e-9 * std::max(na, nb)) {
      res.degenerate = true;
      res.order = res.h_index;
      return res;
    }
  }
  const int m = res.h_index ? res.h_index : max_order + 1;
  const int n = res.g_index ? res.g_index : max_order + 1;
  res.order = std::min(m, n);
  return res;
}

Complex lambda_star(Complex lambda, Complex alpha, Complex h0) {
  const double a2 = std::norm(alpha);
  if (std::abs(1.0 - a2) < 1e-15)
    throw DomainError("lambda_star: |alpha| must differ from 1");
  return (lambda - std::conj(alpha * lambda) + std::conj(alpha * h0) - a2 * h0) / (1.0 - a2);
}

}  // namespace hmtk
