#pragma once

#include <complex>

#include "hmtk/errors.hpp"

namespace hmtk {

using Complex = std::complex<double>;

// A point of the Riemann sphere: either a finite complex number or the point
// at infinity. The two-state representation keeps chordal arithmetic explicit
// instead of hiding it in IEEE infinities.
class ExtendedComplex {
public:
  ExtendedComplex() : value_(0.0, 0.0), infinite_(false) {}
  ExtendedComplex(Complex v);          // throws DomainError on non-finite input
  ExtendedComplex(double re) : ExtendedComplex(Complex(re, 0.0)) {}

  static ExtendedComplex infinity();

  // Promotes overflowed / non-finite evaluation results to the point at
  // infinity instead of throwing. Use this when feeding raw map output into
  // the chordal metric.
  static ExtendedComplex from_value(Complex v);

  bool is_infinity() const noexcept { return infinite_; }
  Complex value() const;               // throws DomainError when infinite

  bool operator==(const ExtendedComplex& other) const noexcept;
  bool operator!=(const ExtendedComplex& other) const noexcept { return !(*this == other); }

private:
  Complex value_;
  bool infinite_;
};

// A point strictly inside the unit disk. Construction rejects |z| >= 1-1e-15
// so hyperbolic quantities stay finite.
class DiskPoint {
public:
  DiskPoint() : value_(0.0, 0.0) {}
  DiskPoint(Complex z);                // throws DomainError near/on the circle
  DiskPoint(double re) : DiskPoint(Complex(re, 0.0)) {}

  Complex value() const noexcept { return value_; }
  double abs() const noexcept { return std::abs(value_); }

private:
  Complex value_;
};

// Stolz angle at a boundary point xi: { z in D : |arg(1 - conj(xi) z)| < opening }.
class StolzAngle {
public:
  StolzAngle(Complex xi, double opening);  // |xi| must be 1 (1e-12), opening in (0, pi/2)

  Complex vertex() const noexcept { return xi_; }
  double opening() const noexcept { return opening_; }

private:
  Complex xi_;
  double opening_;
};

// Chordal distance on the sphere, normalized so sup chi = 1. chi(a,a) = 0
// exactly (including chi(inf, inf) = 0, which we define for total-ness).
double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b);

// Pseudo-hyperbolic distance |(z1 - z2) / (1 - conj(z1) z2)| in [0, 1).
double pseudo_hyperbolic(const DiskPoint& z1, const DiskPoint& z2);

// Hyperbolic distance (1/2) log((1+r)/(1-r)) with r pseudo-hyperbolic.
double hyperbolic_distance(const DiskPoint& z1, const DiskPoint& z2);

bool stolz_contains(const StolzAngle& angle, const DiskPoint& z);

}  // namespace hmtk
