#include "hmtk/sphere.hpp"

#include <cmath>

namespace hmtk {

DeltaTooLarge::DeltaTooLarge(double delta, double delta0)
    : Error("delta " + std::to_string(delta) + " is not below delta0 " + std::to_string(delta0)),
      delta_(delta),
      delta0_(delta0) {}

ExtendedComplex::ExtendedComplex(Complex v) : value_(v), infinite_(false) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw DomainError("ExtendedComplex: non-finite value; use from_value() to promote to infinity");
}

ExtendedComplex ExtendedComplex::infinity() {
  ExtendedComplex e;
  e.infinite_ = true;
  return e;
}

ExtendedComplex ExtendedComplex::from_value(Complex v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return infinity();
  return ExtendedComplex(v);
}

Complex ExtendedComplex::value() const {
  if (infinite_) throw DomainError("ExtendedComplex: value() on the point at infinity");
  return value_;
}

bool ExtendedComplex::operator==(const ExtendedComplex& other) const noexcept {
  if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
  return value_ == other.value_;
}

DiskPoint::DiskPoint(Complex z) : value_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("DiskPoint: non-finite value");
  if (std::abs(z) >= 1.0 - 1e-15)
    throw DomainError("DiskPoint: |z| >= 1 - 1e-15 is outside the open disk");
}

StolzAngle::StolzAngle(Complex xi, double opening) : xi_(xi), opening_(opening) {
  if (std::abs(std::abs(xi) - 1.0) > 1e-12)
    throw DomainError("StolzAngle: vertex must lie on the unit circle");
  if (!(opening > 0.0) || !(opening < 3.14159265358979323846 / 2.0))
    throw DomainError("StolzAngle: opening must lie in (0, pi/2)");
}

double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a == b) return 0.0;
  if (a.is_infinity()) return 1.0 / std::hypot(1.0, std::abs(b.value()));
  if (b.is_infinity()) return 1.0 / std::hypot(1.0, std::abs(a.value()));

  const Complex va = a.value(), vb = b.value();
  const double na = std::abs(va), nb = std::abs(vb);
  // Both values enormous: |a-b| and the norms can overflow, but the chordal
  // distance is invariant under z -> 1/z, so flip to the reciprocal chart.
  if (na > 1e150 && nb > 1e150) {
    const Complex wa = 1.0 / va, wb = 1.0 / vb;
    return std::abs(wa - wb) / (std::hypot(1.0, std::abs(wa)) * std::hypot(1.0, std::abs(wb)));
  }
  return std::abs(va - vb) / (std::hypot(1.0, na) * std::hypot(1.0, nb));
}

double pseudo_hyperbolic(const DiskPoint& z1, const DiskPoint& z2) {
  const Complex a = z1.value(), b = z2.value();
  // Quotient of moduli, not modulus of the complex quotient: complex division
  // rounds asymmetrically, and this function must be exactly symmetric.
  return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

double hyperbolic_distance(const DiskPoint& z1, const DiskPoint& z2) {
  // atanh(r) == (1/2) log((1+r)/(1-r))
  return std::atanh(pseudo_hyperbolic(z1, z2));
}

bool stolz_contains(const StolzAngle& angle, const DiskPoint& z) {
  const Complex w = 1.0 - std::conj(angle.vertex()) * z.value();
  return std::abs(std::arg(w)) < angle.opening();
}

}  // namespace hmtk
