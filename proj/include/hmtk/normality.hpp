#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hmtk/harmonic.hpp"

namespace hmtk {

// Witness-backed lower bound for one of the sup-type objectives. lower_bound
// always equals the objective evaluated at the witness (pair objectives carry
// the partner point in co_witness). diverging is set when every refinement
// round improved by more than cfg.tol AND the witness radius ended up within
// 5% of the radius cap -- the numerical signature of a sup escaping to the
// boundary.
struct NormalityEstimate {
  std::string objective;
  double lower_bound = 0.0;
  DiskPoint witness;
  std::optional<DiskPoint> co_witness;  // second point for pair objectives
  long evals = 0;
  int depth_used = 0;
  bool diverging = false;
  std::vector<double> per_level;  // best value after the sweep and each round
};

// sup over the disk of (1 - |z|^2) f#(z), estimated on the adaptive grid.
NormalityEstimate normality_constant(const HarmonicMap& f, const GridConfig& cfg,
                                     const SampleRecorder* recorder = nullptr);

// Two-point functional
//   chi(f(z), f(w)) / |z - w| * |1 - conj(w) z|^(1 - 2/p)
//     * (1 - |w|^2)^(1/p) * (1 - |z|^2)^(1/p)
// maximized over distinct pairs. The sweep adds diagonal probe pairs
// (z, z + eps * dir) at geometrically shrinking eps, since the sup often
// lives on the diagonal where the quotient tends to f#.
NormalityEstimate p_criterion(const HarmonicMap& f, double p, const GridConfig& cfg);

struct SolveConfig {
  int max_iter = 50;
  double residual_tol = 1e-10;
  double dedup_radius = 1e-6;
  int max_backtracks = 24;
};

struct FivePointValue {
  ExtendedComplex value;
  std::vector<Complex> preimages;
  double sup = 0.0;       // sup over preimages of (1 - |z|^2) f#(z); 0 when empty
  bool empty = false;     // no preimage found in the disk
  bool stalled = false;   // at least one start ran, none converged
};

struct FivePointReport {
  std::array<FivePointValue, 5> values;
  bool sense_preserving_ok = true;  // sampled check; failure is a warning, not fatal
};

// For each of five distinct sphere values, finds preimages under f by damped
// Newton iteration (2x2 real system via the Wirtinger derivatives, multi-start
// from the cfg grid, duplicates within dedup_radius merged) and evaluates the
// normality objective over them.
FivePointReport five_point_test(const HarmonicMap& f, const std::array<ExtendedComplex, 5>& values,
                                const GridConfig& cfg, const SolveConfig& solver = {});

// sup of (1 - |z|^2)^n (|h^(n)(z)| + |g^(n)(z)|) over samples with |f(z)| <= K.
NormalityEstimate derivative_growth(const HarmonicMap& f, int n, double K, const GridConfig& cfg,
                                    const SampleRecorder* recorder = nullptr);

// B_1(n) = 1, B_k(n) = sum_{j=k-1}^{n-1} B_{k-1}(j) for 1 <= k <= n.
// Throws DomainError out of range or on (improbable) int64 overflow.
std::int64_t bk(int k, int n);

struct LappanOptions {
  double tail_fraction = 0.25;
  double tol_factor = 1e-3;  // tail threshold is tol_factor * (chi_1 + 1)
};

struct LappanVerdict {
  bool consistent = true;
  std::optional<std::size_t> witness_index;  // first tail index violating the threshold
  double first_chi = 0.0;
  double tail_max = 0.0;
};

// Tests the two-point normality heuristic on a sequence of point pairs whose
// hyperbolic distances shrink to 0: for a normal map the chordal distances of
// the images must shrink too. pre: rho nonincreasing, final rho < 1e-3.
LappanVerdict lappan_pair_test(const HarmonicMap& f,
                               const std::vector<std::pair<DiskPoint, DiskPoint>>& pairs,
                               const LappanOptions& options = {});

}  // namespace hmtk
