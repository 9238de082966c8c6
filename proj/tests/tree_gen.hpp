#pragma once

// Random expression trees for derivative cross-checks. The generator keeps
// every node smooth on |z| <= 0.45: denominators and log arguments are offset
// away from their bad sets, exp arguments are damped, moebius denominators
// are dominated by |d|. A tree can still go singular through an unlucky
// nesting, so callers should skip (regenerate) trees that throw or blow up.

#include <cstdlib>
#include <random>
#include <vector>

#include "hmtk/analytic.hpp"

namespace treegen {

using hmtk::AnalyticExpr;
using hmtk::Complex;

inline Complex rand_c(std::mt19937& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  const double re = u(rng), im = u(rng);
  return Complex(re, im);
}

inline AnalyticExpr random_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 10);
  switch (pick(rng)) {
    case 0:
      return AnalyticExpr::constant(rand_c(rng, 1.0));
    case 1:
      return AnalyticExpr::identity();
    case 2: {
      std::vector<Complex> cs = {rand_c(rng, 0.4), rand_c(rng, 0.6), rand_c(rng, 0.4)};
      return AnalyticExpr::polynomial(cs);
    }
    case 3:
      return AnalyticExpr::sum(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 4:
      return AnalyticExpr::product(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 5: {
      AnalyticExpr den = AnalyticExpr::sum(
          AnalyticExpr::constant(Complex(3.0, 0.0)),
          AnalyticExpr::product(AnalyticExpr::constant(Complex(0.3, 0.0)),
                                random_tree(rng, depth - 1)));
      return AnalyticExpr::quotient(random_tree(rng, depth - 1), den);
    }
    case 6: {
      AnalyticExpr damped = AnalyticExpr::product(AnalyticExpr::constant(Complex(0.4, 0.0)),
                                                  random_tree(rng, depth - 1));
      return AnalyticExpr::exp_of(damped);
    }
    case 7: {
      AnalyticExpr arg = AnalyticExpr::sum(
          AnalyticExpr::constant(Complex(3.0, 0.0)),
          AnalyticExpr::product(AnalyticExpr::constant(Complex(0.3, 0.0)),
                                random_tree(rng, depth - 1)));
      return AnalyticExpr::log_of(arg);
    }
    case 8: {
      std::uniform_int_distribution<int> ex(2, 3);
      return AnalyticExpr::power(random_tree(rng, depth - 1), ex(rng));
    }
    case 9: {
      // |c z| <= 0.45 < |d| - 1 keeps the denominator away from zero.
      Complex a = rand_c(rng, 1.0), b = rand_c(rng, 1.0), c = rand_c(rng, 1.0);
      Complex d = Complex(2.0, 0.0) + rand_c(rng, 0.3);
      if (std::abs(a * d - b * c) < 1e-3) a += Complex(1.0, 0.0);
      return AnalyticExpr::moebius(a, b, c, d);
    }
    default: {
      // inner polynomial keeps |inner(z)| <= ~0.45, staying in the smooth box
      std::vector<Complex> cs = {rand_c(rng, 0.15), rand_c(rng, 0.4), rand_c(rng, 0.2)};
      return AnalyticExpr::compose(random_tree(rng, depth - 1), AnalyticExpr::polynomial(cs));
    }
  }
}

}  // namespace treegen
