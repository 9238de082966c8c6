#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hmtk/sphere.hpp"

namespace hmtk {

// Immutable expression tree for analytic functions on (subsets of) the disk.
// Supported node kinds: constant, identity, sum, product, quotient,
// composition, exp, log (principal branch), integer power, polynomial, and
// moebius(a,b,c,d) = (az+b)/(cz+d).
//
// Construction does light constant folding (all-constant operands collapse,
// additive zeros and multiplicative ones/zeros drop out, polynomials trim
// trailing zero coefficients) and nothing else, so derivative trees keep a
// predictable shape.
class AnalyticExpr {
public:
  enum class Kind {
    constant,
    identity,
    sum,
    product,
    quotient,
    compose,
    exp_fn,
    log_fn,
    power,
    polynomial,
    moebius,
  };

  AnalyticExpr();  // the zero constant

  static AnalyticExpr constant(Complex c);
  static AnalyticExpr identity();
  static AnalyticExpr sum(const AnalyticExpr& a, const AnalyticExpr& b);
  static AnalyticExpr product(const AnalyticExpr& a, const AnalyticExpr& b);
  static AnalyticExpr quotient(const AnalyticExpr& num, const AnalyticExpr& den);
  static AnalyticExpr compose(const AnalyticExpr& outer, const AnalyticExpr& inner);
  static AnalyticExpr exp_of(const AnalyticExpr& arg);
  static AnalyticExpr log_of(const AnalyticExpr& arg);
  static AnalyticExpr power(const AnalyticExpr& arg, int n);
  static AnalyticExpr polynomial(std::vector<Complex> coeffs);  // coeffs[k] * z^k
  static AnalyticExpr moebius(Complex a, Complex b, Complex c, Complex d);  // ad-bc != 0

  // Convenience: difference as sum(a, (-1) * b).
  static AnalyticExpr difference(const AnalyticExpr& a, const AnalyticExpr& b);

  Kind kind() const;

  // Evaluates at z. Throws SingularPoint at poles of quotients/moebius nodes,
  // on the closed negative real axis for log, and for 0 to a negative power.
  Complex eval(Complex z) const;

  // Exact symbolic derivative (a new tree; *this is untouched).
  AnalyticExpr derivative() const;
  AnalyticExpr nth_derivative(int n) const;

  nlohmann::json to_json() const;
  static AnalyticExpr from_json(const nlohmann::json& j);

  std::string to_string() const;

private:
  struct Node;
  explicit AnalyticExpr(std::shared_ptr<const Node> node);
  static AnalyticExpr wrap(std::shared_ptr<const Node> node);
  static Complex eval_node(const Node& n, Complex z);
  static std::string node_to_string(const Node& n);

  std::shared_ptr<const Node> node_;
};

// phi(z) = (z0 - z) / (1 - conj(z0) z); a self-inverse disk automorphism
// swapping z0 and 0.
AnalyticExpr mobius_to_z0(const DiskPoint& z0);

// phi_xi(s) = (s + xi) / (1 + xi s) for xi in (0, 1); pushes 0 to xi along
// the radius.
AnalyticExpr mobius_boundary(double xi);

// Parses a complex scalar from JSON: either a number (imag = 0) or [re, im].
Complex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(Complex v);

}  // namespace hmtk
