#pragma once

#include <stdexcept>
#include <string>

namespace hmtk {

// Base for every error the toolkit raises on purpose. Catch this at the CLI
// boundary and map it to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values (points outside the disk, invalid configs, ...).
struct DomainError : Error {
  using Error::Error;
};

// Evaluation hit a pole, a log branch cut, or 0 to a negative power.
struct SingularPoint : Error {
  using Error::Error;
};

// zero_order called at a point that is not a zero of the map.
struct NotAZero : Error {
  using Error::Error;
};

// zero_order found no nonvanishing Taylor coefficient up to max_order.
struct OrderExceeded : Error {
  using Error::Error;
};

// The eval budget (GridConfig::max_evals) ran out before refinement finished.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Polylines / polygons / arcs that violate their geometric preconditions.
struct GeometryError : Error {
  using Error::Error;
};

// Frames handed to convergence_probe disagree on mesh or radius.
struct MeshMismatch : Error {
  using Error::Error;
};

// zoom() was asked for a frame that sticks out of the unit disk.
struct FrameEscapesDisk : Error {
  using Error::Error;
};

// Catalog lookup by an unregistered name.
struct UnknownEntry : Error {
  using Error::Error;
};

// delta passed to solve_eta / verify_max_principle is not below the critical
// value delta0; carries both so callers can report the gap.
class DeltaTooLarge : public Error {
public:
  DeltaTooLarge(double delta, double delta0);

  double delta() const noexcept { return delta_; }
  double delta0() const noexcept { return delta0_; }

private:
  double delta_;
  double delta0_;
};

}  // namespace hmtk
