#include "hmtk/analytic.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace hmtk {

namespace {

std::string fmt_complex(Complex v) {
  char buf[64];
  if (v.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%g", v.real());
  } else {
    std::snprintf(buf, sizeof buf, "(%g%+gi)", v.real(), v.imag());
  }
  return buf;
}

// z^n for integer n, exponentiation by squaring. 0^negative is singular and
// handled by the caller.
Complex ipow(Complex z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex acc(1.0, 0.0);
  Complex base = z;
  unsigned e = static_cast<unsigned>(n);
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

bool on_log_cut(Complex v) { return v.imag() == 0.0 && v.real() <= 0.0; }

}  // namespace

struct AnalyticExpr::Node {
  Kind kind;
  Complex value{};              // constant
  std::vector<Complex> coeffs;  // polynomial, coeffs[k] * z^k
  Complex a{}, b{}, c{}, d{};   // moebius
  int exponent = 0;             // power
  std::shared_ptr<const Node> lhs;  // operand / unary arg / outer
  std::shared_ptr<const Node> rhs;  // second operand / inner
};

AnalyticExpr::AnalyticExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

AnalyticExpr::AnalyticExpr() : AnalyticExpr(constant(0.0)) {}

AnalyticExpr AnalyticExpr::wrap(std::shared_ptr<const Node> node) {
  return AnalyticExpr(std::move(node));
}

AnalyticExpr AnalyticExpr::constant(Complex c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->value = c;
  return AnalyticExpr(std::move(n));
}

AnalyticExpr AnalyticExpr::identity() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::identity;
  return AnalyticExpr(std::move(n));
}

AnalyticExpr AnalyticExpr::sum(const AnalyticExpr& a, const AnalyticExpr& b) {
  const Node& na = *a.node_;
  const Node& nb = *b.node_;
  if (na.kind == Kind::constant && nb.kind == Kind::constant)
    return constant(na.value + nb.value);
  if (na.kind == Kind::constant && na.value == Complex(0.0, 0.0)) return b;
  if (nb.kind == Kind::constant && nb.value == Complex(0.0, 0.0)) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::sum;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return AnalyticExpr(std::move(n));
}

AnalyticExpr AnalyticExpr::product(const AnalyticExpr& a, const AnalyticExpr& b) {
  const Node& na = *a.node_;
  const Node& nb = *b.node_;
  if (na.kind == Kind::constant && nb.kind == Kind::constant)
    return constant(na.value * nb.value);
  if ((na.kind == Kind::constant && na.value == Complex(0.0, 0.0)) ||
      (nb.kind == Kind::constant && nb.value == Complex(0.0, 0.0)))
    return constant(0.0);
  if (na.kind == Kind::constant && na.value == Complex(1.0, 0.0)) return b;
  if (nb.kind == Kind::constant && nb.value == Complex(1.0, 0.0)) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::product;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return AnalyticExpr(std::move(n));
}

AnalyticExpr AnalyticExpr::quotient(const AnalyticExpr& num, const AnalyticExpr& den) {
  const Node& nn = *num.node_;
  const Node& nd = *den.node_;
  if (nn.kind == Kind::constant && nd.kind == Kind::constant &&
      nd.value != Complex(0.0, 0.0))
    return constant(nn.value / nd.value);
  if (nd.kind == Kind::constant && nd.value == Complex(1.0, 0.0)) return num;
  auto n = std::make_shared<Node>();
  n->kind = Kind::quotient;
  n->lhs = num.node_;
  n->rhs = den.node_;
  return AnalyticExpr(std::move(n));
}

AnalyticExpr AnalyticExpr::compose(const AnalyticExpr& outer, const AnalyticExpr& inner) {
  if (outer.node_->kind == Kind::constant) return outer;
  if (outer.node_->kind == Kind::identity) return inner;
  if (inner.node_->kind == Kind::identity) return outer;
  auto n = std::make_shared<Node>();
  n->kind = Kind::compose;
  n->lhs = outer.node_;
  n->rhs = inner.node_;
  return AnalyticExpr(std::move(n));
}

AnalyticExpr AnalyticExpr::exp_of(const AnalyticExpr& arg) {
  if (arg.node_->kind == Kind::constant) return constant(std::exp(arg.node_->value));
  auto n = std::make_shared<Node>();
  n->kind = Kind::exp_fn;
  n->lhs = arg.node_;
  return AnalyticExpr(std::move(n));
}

AnalyticExpr AnalyticExpr::log_of(const AnalyticExpr& arg) {
  if (arg.node_->kind == Kind::constant && !on_log_cut(arg.node_->value))
    return constant(std::log(arg.node_->value));
  auto n = std::make_shared<Node>();
  n->kind = Kind::log_fn;
  n->lhs = arg.node_;
  return AnalyticExpr(std::move(n));
}

AnalyticExpr AnalyticExpr::power(const AnalyticExpr& arg, int n) {
  if (n == 0) return constant(1.0);
  if (n == 1) return arg;
  if (arg.node_->kind == Kind::constant &&
      !(arg.node_->value == Complex(0.0, 0.0) && n < 0))
    return constant(ipow(arg.node_->value, n));
  auto node = std::make_shared<Node>();
  node->kind = Kind::power;
  node->exponent = n;
  node->lhs = arg.node_;
  return AnalyticExpr(std::move(node));
}

AnalyticExpr AnalyticExpr::polynomial(std::vector<Complex> coeffs) {
  while (!coeffs.empty() && coeffs.back() == Complex(0.0, 0.0)) coeffs.pop_back();
  if (coeffs.empty()) return constant(0.0);
  if (coeffs.size() == 1) return constant(coeffs[0]);
  auto n = std::make_shared<Node>();
  n->kind = Kind::polynomial;
  n->coeffs = std::move(coeffs);
  return AnalyticExpr(std::move(n));
}

AnalyticExpr AnalyticExpr::moebius(Complex a, Complex b, Complex c, Complex d) {
  if (a * d - b * c == Complex(0.0, 0.0))
    throw DomainError("moebius: ad - bc must be nonzero");
  auto n = std::make_shared<Node>();
  n->kind = Kind::moebius;
  n->a = a;
  n->b = b;
  n->c = c;
  n->d = d;
  return AnalyticExpr(std::move(n));
}

AnalyticExpr AnalyticExpr::difference(const AnalyticExpr& a, const AnalyticExpr& b) {
  return sum(a, product(constant(-1.0), b));
}

AnalyticExpr::Kind AnalyticExpr::kind() const { return node_->kind; }

Complex AnalyticExpr::eval_node(const Node& n, Complex z) {
  switch (n.kind) {
    case Kind::constant:
      return n.value;
    case Kind::identity:
      return z;
    case Kind::sum:
      return eval_node(*n.lhs, z) + eval_node(*n.rhs, z);
    case Kind::product:
      return eval_node(*n.lhs, z) * eval_node(*n.rhs, z);
    case Kind::quotient: {
      const Complex den = eval_node(*n.rhs, z);
      if (den == Complex(0.0, 0.0))
        throw SingularPoint("quotient denominator vanishes in " + node_to_string(n) +
                            " at z = " + fmt_complex(z));
      return eval_node(*n.lhs, z) / den;
    }
    case Kind::compose:
      return eval_node(*n.lhs, eval_node(*n.rhs, z));
    case Kind::exp_fn:
      return std::exp(eval_node(*n.lhs, z));
    case Kind::log_fn: {
      const Complex u = eval_node(*n.lhs, z);
      if (on_log_cut(u))
        throw SingularPoint("log argument on (-inf, 0] in " + node_to_string(n) +
                            " at z = " + fmt_complex(z));
      return std::log(u);
    }
    case Kind::power: {
      const Complex u = eval_node(*n.lhs, z);
      if (u == Complex(0.0, 0.0) && n.exponent < 0)
        throw SingularPoint("0 raised to a negative power in " + node_to_string(n) +
                            " at z = " + fmt_complex(z));
      return ipow(u, n.exponent);
    }
    case Kind::polynomial: {
      Complex acc(0.0, 0.0);
      for (auto it = n.coeffs.rbegin(); it != n.coeffs.rend(); ++it) acc = acc * z + *it;
      return acc;
    }
    case Kind::moebius: {
      const Complex den = n.c * z + n.d;
      if (den == Complex(0.0, 0.0))
        throw SingularPoint("moebius pole in " + node_to_string(n) + " at z = " + fmt_complex(z));
      return (n.a * z + n.b) / den;
    }
  }
  throw DomainError("eval: corrupt expression node");
}

Complex AnalyticExpr::eval(Complex z) const { return eval_node(*node_, z); }

AnalyticExpr AnalyticExpr::derivative() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::constant:
      return constant(0.0);
    case Kind::identity:
      return constant(1.0);
    case Kind::sum:
      return sum(wrap(n.lhs).derivative(), wrap(n.rhs).derivative());
    case Kind::product: {
      AnalyticExpr a = wrap(n.lhs), b = wrap(n.rhs);
      return sum(product(a.derivative(), b), product(a, b.derivative()));
    }
    case Kind::quotient: {
      AnalyticExpr a = wrap(n.lhs), b = wrap(n.rhs);
      return quotient(difference(product(a.derivative(), b), product(a, b.derivative())),
                      power(b, 2));
    }
    case Kind::compose: {
      AnalyticExpr f = wrap(n.lhs), g = wrap(n.rhs);
      return product(compose(f.derivative(), g), g.derivative());
    }
    case Kind::exp_fn: {
      AnalyticExpr u = wrap(n.lhs);
      return product(exp_of(u), u.derivative());
    }
    case Kind::log_fn: {
      AnalyticExpr u = wrap(n.lhs);
      return quotient(u.derivative(), u);
    }
    case Kind::power: {
      AnalyticExpr u = wrap(n.lhs);
      return product(constant(static_cast<double>(n.exponent)),
                     product(power(u, n.exponent - 1), u.derivative()));
    }
    case Kind::polynomial: {
      std::vector<Complex> d;
      for (size_t k = 1; k < n.coeffs.size(); ++k)
        d.push_back(n.coeffs[k] * static_cast<double>(k));
      return polynomial(std::move(d));
    }
    case Kind::moebius: {
      if (n.c == Complex(0.0, 0.0)) return constant(n.a / n.d);
      return quotient(constant(n.a * n.d - n.b * n.c), power(polynomial({n.d, n.c}), 2));
    }
  }
  throw DomainError("derivative: corrupt expression node");
}

AnalyticExpr AnalyticExpr::nth_derivative(int n) const {
  if (n < 0) throw DomainError("nth_derivative: n must be >= 0");
  AnalyticExpr e = *this;
  for (int i = 0; i < n; ++i) e = e.derivative();
  return e;
}

std::string AnalyticExpr::node_to_string(const Node& n) {
  switch (n.kind) {
    case Kind::constant:
      return fmt_complex(n.value);
    case Kind::identity:
      return "z";
    case Kind::sum:
      return "(" + node_to_string(*n.lhs) + " + " + node_to_string(*n.rhs) + ")";
    case Kind::product:
      return "(" + node_to_string(*n.lhs) + " * " + node_to_string(*n.rhs) + ")";
    case Kind::quotient:
      return "(" + node_to_string(*n.lhs) + " / " + node_to_string(*n.rhs) + ")";
    case Kind::compose:
      return "(" + node_to_string(*n.lhs) + " o " + node_to_string(*n.rhs) + ")";
    case Kind::exp_fn:
      return "exp(" + node_to_string(*n.lhs) + ")";
    case Kind::log_fn:
      return "log(" + node_to_string(*n.lhs) + ")";
    case Kind::power:
      return "(" + node_to_string(*n.lhs) + ")^" + std::to_string(n.exponent);
    case Kind::polynomial: {
      std::string s = "poly[";
      for (size_t k = 0; k < n.coeffs.size(); ++k) {
        if (k) s += ", ";
        s += fmt_complex(n.coeffs[k]);
      }
      return s + "]";
    }
    case Kind::moebius:
      return "((" + fmt_complex(n.a) + " z + " + fmt_complex(n.b) + ")/(" + fmt_complex(n.c) +
             " z + " + fmt_complex(n.d) + "))";
  }
  return "?";
}

std::string AnalyticExpr::to_string() const { return node_to_string(*node_); }

Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw DomainError("expected a number or an [re, im] pair, got " + j.dump());
}

nlohmann::json complex_to_json(Complex v) {
  return nlohmann::json::array({v.real(), v.imag()});
}

nlohmann::json AnalyticExpr::to_json() const {
  const Node& n = *node_;
  nlohmann::json j;
  switch (n.kind) {
    case Kind::constant:
      j["op"] = "const";
      j["value"] = complex_to_json(n.value);
      break;
    case Kind::identity:
      j["op"] = "z";
      break;
    case Kind::sum:
      j["op"] = "sum";
      j["args"] = nlohmann::json::array({wrap(n.lhs).to_json(), wrap(n.rhs).to_json()});
      break;
    case Kind::product:
      j["op"] = "product";
      j["args"] = nlohmann::json::array({wrap(n.lhs).to_json(), wrap(n.rhs).to_json()});
      break;
    case Kind::quotient:
      j["op"] = "quotient";
      j["num"] = wrap(n.lhs).to_json();
      j["den"] = wrap(n.rhs).to_json();
      break;
    case Kind::compose:
      j["op"] = "compose";
      j["outer"] = wrap(n.lhs).to_json();
      j["inner"] = wrap(n.rhs).to_json();
      break;
    case Kind::exp_fn:
      j["op"] = "exp";
      j["arg"] = wrap(n.lhs).to_json();
      break;
    case Kind::log_fn:
      j["op"] = "log";
      j["arg"] = wrap(n.lhs).to_json();
      break;
    case Kind::power:
      j["op"] = "pow";
      j["arg"] = wrap(n.lhs).to_json();
      j["n"] = n.exponent;
      break;
    case Kind::polynomial: {
      j["op"] = "poly";
      auto arr = nlohmann::json::array();
      for (const auto& c : n.coeffs) arr.push_back(complex_to_json(c));
      j["coeffs"] = arr;
      break;
    }
    case Kind::moebius:
      j["op"] = "mobius";
      j["a"] = complex_to_json(n.a);
      j["b"] = complex_to_json(n.b);
      j["c"] = complex_to_json(n.c);
      j["d"] = complex_to_json(n.d);
      break;
  }
  return j;
}

AnalyticExpr AnalyticExpr::from_json(const nlohmann::json& j) {
  if (j.is_number() || j.is_array()) return constant(complex_from_json(j));
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
    throw DomainError("expression node must be a number, an [re, im] pair, or a tagged object: " +
                      j.dump());
  const std::string op = j["op"].get<std::string>();

  auto arg_or_identity = [&](const char* key) {
    return j.contains(key) ? from_json(j.at(key)) : identity();
  };

  if (op == "const") return constant(complex_from_json(j.at("value")));
  if (op == "z" || op == "identity") return identity();
  if (op == "sum" || op == "product") {
    const auto& args = j.at("args");
    if (!args.is_array() || args.empty())
      throw DomainError(op + ": expected a nonempty \"args\" array");
    AnalyticExpr acc = from_json(args[0]);
    for (size_t i = 1; i < args.size(); ++i) {
      AnalyticExpr next = from_json(args[i]);
      acc = (op == "sum") ? sum(acc, next) : product(acc, next);
    }
    return acc;
  }
  if (op == "quotient") return quotient(from_json(j.at("num")), from_json(j.at("den")));
  if (op == "compose") return compose(from_json(j.at("outer")), from_json(j.at("inner")));
  if (op == "exp") return exp_of(arg_or_identity("arg"));
  if (op == "log") return log_of(arg_or_identity("arg"));
  if (op == "pow") return power(arg_or_identity("arg"), j.at("n").get<int>());
  if (op == "poly" || op == "polynomial") {
    const auto& cs = j.at("coeffs");
    if (!cs.is_array()) throw DomainError("poly: \"coeffs\" must be an array");
    std::vector<Complex> coeffs;
    for (const auto& c : cs) coeffs.push_back(complex_from_json(c));
    return polynomial(std::move(coeffs));
  }
  if (op == "mobius" || op == "moebius")
    return moebius(complex_from_json(j.at("a")), complex_from_json(j.at("b")),
                   complex_from_json(j.at("c")), complex_from_json(j.at("d")));
  throw DomainError("unknown expression op \"" + op + "\"");
}

AnalyticExpr mobius_to_z0(const DiskPoint& z0) {
  const Complex w = z0.value();
  return AnalyticExpr::moebius(Complex(-1.0, 0.0), w, -std::conj(w), Complex(1.0, 0.0));
}

AnalyticExpr mobius_boundary(double xi) {
  if (!(xi > 0.0) || !(xi < 1.0)) throw DomainError("mobius_boundary: xi must lie in (0, 1)");
  return AnalyticExpr::moebius(Complex(1.0, 0.0), Complex(xi, 0.0), Complex(xi, 0.0),
                               Complex(1.0, 0.0));
}

}  // namespace hmtk
