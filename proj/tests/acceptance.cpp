// Acceptance gate: every criterion prints exactly one PASS/FAIL line and the
// process exits with the number of failures. Keep each check self-contained;
// a thrown std::exception fails only its own criterion.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hmtk/boundary.hpp"
#include "hmtk/catalog.hpp"
#include "hmtk/max_principle.hpp"
#include "hmtk/normality.hpp"
#include "hmtk/rescaling.hpp"
#include "tree_gen.hpp"

using namespace hmtk;

namespace {

const double kPi = 3.14159265358979323846;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw Failure(msg);
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

ExtendedComplex random_sphere_point(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (u(rng) < 0.08) return ExtendedComplex::infinity();
  std::normal_distribution<double> g(0.0, 1.0);
  const double scale = std::pow(10.0, 6.0 * (u(rng) - 0.5));
  return ExtendedComplex(Complex(g(rng) * scale, g(rng) * scale));
}

// ---- criteria ---------------------------------------------------------

void metric_suite() {
  std::mt19937 rng(20240811);
  for (int it = 0; it < 10000; ++it) {
    const ExtendedComplex a = random_sphere_point(rng);
    const ExtendedComplex b = random_sphere_point(rng);
    const ExtendedComplex c = random_sphere_point(rng);
    const double lhs = chordal_distance(a, c);
    const double rhs = chordal_distance(a, b) + chordal_distance(b, c);
    require(lhs <= rhs + 1e-12, "triangle inequality violated by " + fmt(lhs - rhs));
  }
  require(chordal_distance(ExtendedComplex(Complex(0.0, 0.0)), ExtendedComplex::infinity()) == 1.0,
          "chi(0, inf) != 1");
  for (int it = 0; it < 100; ++it) {
    const ExtendedComplex a = random_sphere_point(rng);
    require(chordal_distance(a, a) == 0.0, "chi(a, a) != 0");
  }
  const double rho = hyperbolic_distance(DiskPoint(Complex(0.0, 0.0)), DiskPoint(Complex(0.5, 0.0)));
  require(std::abs(rho - 0.5 * std::log(3.0)) <= 1e-12, "rho(0, 0.5) off by " +
              fmt(rho - 0.5 * std::log(3.0)));
}

void derivative_oracle() {
  std::mt19937 rng(77001);
  std::uniform_real_distribution<double> u(-0.45, 0.45);
  const double h = 1e-6;
  int trees_checked = 0, attempts = 0;
  while (trees_checked < 100 && attempts < 1500) {
    ++attempts;
    const AnalyticExpr e = treegen::random_tree(rng, 5);
    const AnalyticExpr de = e.derivative();
    bool usable = true;
    for (int k = 0; k < 10 && usable; ++k) {
      const Complex z(u(rng), u(rng));
      try {
        const Complex sym = de.eval(z);
        if (!(std::abs(sym) < 1e6)) {
          usable = false;
          break;
        }
        const Complex num = (e.eval(z + h) - e.eval(z - h)) / (2.0 * h);
        require(std::abs(sym - num) <= 1e-5 * std::max(1.0, std::abs(sym)),
                "tree " + std::to_string(attempts) + ": |sym - num| = " + fmt(std::abs(sym - num)));
      } catch (const SingularPoint&) {
        usable = false;
      }
    }
    if (usable) ++trees_checked;
  }
  require(trees_checked == 100, "only " + std::to_string(trees_checked) + " usable trees");
}

void identity_normality() {
  GridConfig cfg;
  const NormalityEstimate est = normality_constant(catalog_get("identity").map, cfg);
  require(std::abs(est.lower_bound - 1.0) <= 1e-6, "sup = " + fmt(est.lower_bound));
  require(est.witness.abs() < 1e-3, "witness radius " + fmt(est.witness.abs()));
  require(est.depth_used == 4, "depth_used = " + std::to_string(est.depth_used));
}

void automorphism_invariance() {
  GridConfig cfg;
  const std::vector<std::string> bounded = {"identity", "const-dilatation-0.5", "bounded-normal",
                                            "exp-decay", "poly-harmonic"};
  std::vector<double> base;
  for (const std::string& name : bounded)
    base.push_back(normality_constant(catalog_get(name).map, cfg).lower_bound);

  std::mt19937 rng(555);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const std::size_t m = i % bounded.size();
    const Complex a = std::polar(0.8 * u(rng), 2.0 * kPi * u(rng));
    const AnalyticExpr phi = AnalyticExpr::product(
        AnalyticExpr::constant(std::polar(1.0, 2.0 * kPi * u(rng))), mobius_to_z0(DiskPoint(a)));
    const double moved =
        normality_constant(precompose(catalog_get(bounded[m]).map, phi), cfg).lower_bound;
    require(std::abs(moved - base[m]) <= 1e-2,
            bounded[m] + " drifted by " + fmt(moved - base[m]) + " under automorphism " +
                std::to_string(i));
  }

  for (int i = 0; i < 20; ++i) {
    const std::size_t m = i % bounded.size();
    AnalyticExpr phi = (i % 2 == 0)
                           ? AnalyticExpr::polynomial(
                                 {Complex(0.0, 0.0), std::polar(0.2 + 0.75 * u(rng), 2.0 * kPi * u(rng))})
                           : AnalyticExpr::power(AnalyticExpr::identity(), 2);
    const double moved =
        normality_constant(precompose(catalog_get(bounded[m]).map, phi), cfg).lower_bound;
    require(moved <= base[m] + 1e-2,
            bounded[m] + " grew to " + fmt(moved) + " under a non-automorphism");
  }
}

void blowup_detection() {
  GridConfig cfg;
  cfg.refine_depth = 7;
  const NormalityEstimate est = normality_constant(catalog_get("exp-blowup").map, cfg);
  require(est.diverging, "diverging flag not set");
  require(est.per_level.size() == 8, "per_level has " + std::to_string(est.per_level.size()));
  for (int d = 3; d <= 6; ++d)
    require(est.per_level[d + 1] > 1.10 * est.per_level[d],
            "level " + std::to_string(d + 1) + "/" + std::to_string(d) + " ratio " +
                fmt(est.per_level[d + 1] / est.per_level[d]));
}

void pair_functional_agreement() {
  GridConfig cfg;
  for (const CatalogEntry& e : catalog_entries()) {
    const bool from_pairs = p_criterion(e.map, 2.0, cfg).diverging;
    const bool from_sup = normality_constant(e.map, cfg).diverging;
    require(from_pairs == from_sup,
            e.name + ": pair sweep says " + (from_pairs ? "diverging" : "settled") +
                ", sup sweep disagrees");
  }
}

void bk_recursion() {
  // independent oracle: direct dynamic programming over the defining sums
  constexpr int N = 25;
  long long dp[N + 1][N + 1] = {};
  for (int n = 1; n <= N; ++n) dp[1][n] = 1;
  for (int k = 2; k <= N; ++k)
    for (int n = k; n <= N; ++n) {
      long long acc = 0;
      for (int m = k - 1; m <= n - 1; ++m) acc += dp[k - 1][m];
      dp[k][n] = acc;
    }
  for (int n = 1; n <= N; ++n)
    for (int k = 1; k <= n; ++k)
      require(bk(k, n) == dp[k][n], "bk(" + std::to_string(k) + "," + std::to_string(n) + ")");
  for (int n = 2; n <= N; ++n)
    require(bk(2, n) == n - 1, "bk(2, n)");
  for (int n = 3; n <= N; ++n)
    require(bk(3, n) == static_cast<long long>(n - 1) * (n - 2) / 2, "bk(3, n)");
  for (int k = 3; k <= N; ++k)
    for (int n = k; n <= N; ++n)
      require(static_cast<double>(bk(k, n)) < std::pow(double(n - k + 2), k - 1),
              "bound fails at k=" + std::to_string(k) + ", n=" + std::to_string(n));
}

void lens_constants() {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int it = 0; it < 100; ++it) {
    const double k = 0.01 + 9.99 * u(rng);
    require(std::abs(delta_zero(k) - b_function(t_zero(k), k)) <= 1e-12,
            "delta0 closed forms split at kappa = " + fmt(k));
  }
  for (int it = 0; it < 1000; ++it) {
    const double k = 0.02 + 7.98 * u(rng);
    const double delta = delta_zero(k) * (1e-6 + 0.999 * u(rng));
    const double eta = solve_eta(delta, k);
    require(std::abs(b_function(eta, k) - delta) <= 1e-12,
            "round trip residual " + fmt(b_function(eta, k) - delta));
  }
  for (double k : {0.5, kPi / 2.0, 3.0}) {
    const double t0 = t_zero(k);
    double prev = -1.0;
    for (int i = 1; i <= 10000; ++i) {
      // exp(-kappa/(2t)) underflows to exactly 0 near t = 0; strictness
      // starts once b is representable
      const double v = b_function(t0 * i / 10001.0, k);
      require(v > prev || (v == 0.0 && prev == 0.0), "b not increasing before t0");
      prev = v;
    }
    prev = b_function(t0, k);
    for (int i = 1; i <= 10000; ++i) {
      const double v = b_function(t0 + 3.0 * t0 * i / 10000.0, k);
      require(v < prev, "b not decreasing after t0");
      prev = v;
    }
  }
}

void blowup_extraction() {
  GridConfig cfg;
  std::vector<double> schedule;
  for (int n = 1; n <= 12; ++n) schedule.push_back(1.0 - std::pow(2.0, -n));

  const HarmonicMap f = catalog_get("exp-blowup").map;
  const BlowupSequence seq = extract_blowup(f, schedule, cfg);
  require(seq.entries.size() == 12, "expected 12 entries");
  for (std::size_t n = 0; n < seq.entries.size(); ++n) {
    const BlowupEntry& e = seq.entries[n];
    const double prod = e.rho * spherical_derivative(f, e.z);
    require(std::abs(prod - 1.0) <= 1e-12,
            "rho * f# = " + fmt(prod) + " at level " + std::to_string(n + 1));
    if (n > 0)
      require(e.M > seq.entries[n - 1].M, "M not strictly increasing at level " +
                  std::to_string(n + 1));
  }

  const BlowupSequence flat = extract_blowup(catalog_get("identity").map, schedule, cfg);
  for (const BlowupEntry& e : flat.entries)
    require(e.M <= 1.0 + 1e-9, "identity M = " + fmt(e.M));
}

void five_point_closed_form() {
  GridConfig cfg;
  const std::array<ExtendedComplex, 5> values = {
      ExtendedComplex(Complex(0.0, 0.0)), ExtendedComplex(Complex(0.25, 0.0)),
      ExtendedComplex(Complex(0.0, 0.25)), ExtendedComplex(Complex(-0.25, 0.0)),
      ExtendedComplex(Complex(3.0, 0.0))};
  const FivePointReport rep = five_point_test(catalog_get("identity").map, values, cfg);
  for (int i = 0; i < 4; ++i) {
    require(!rep.values[i].empty, "value " + std::to_string(i) + " found no preimage");
    const Complex w = values[i].value();
    const double expect = (1.0 - std::norm(w)) / (1.0 + std::norm(w));
    require(std::abs(rep.values[i].sup - expect) <= 1e-8,
            "sup at value " + std::to_string(i) + " = " + fmt(rep.values[i].sup) +
                ", expected " + fmt(expect));
  }
  require(rep.values[4].empty, "out-of-range value not flagged empty");
}

void boundary_agreement() {
  const HarmonicMap f = catalog_get("exp-decay").map;
  const ExtendedComplex zero(Complex(0.0, 0.0));
  const std::vector<double> openings = {kPi / 6.0, kPi / 3.0};

  const LimitProbe along = asymptotic_value(
      f, PathPolyline({Complex(0.0, 0.0), Complex(1.0, 0.0)}), 40, 1e-6);
  require(!along.divergent, "asymptotic probe divergent");
  require(chordal_distance(along.value, zero) <= 1e-6, "asymptotic limit away from 0");

  const LimitProbe radial = radial_limit(f, Complex(1.0, 0.0), 40, 1e-6);
  require(!radial.divergent, "radial probe divergent");
  require(chordal_distance(radial.value, zero) <= 1e-6, "radial limit away from 0");

  const LimitProbe angular = angular_limit(f, Complex(1.0, 0.0), openings, 40, 1e-6);
  require(!angular.divergent, "angular probe divergent");
  require(chordal_distance(angular.value, zero) <= 1e-6, "angular limit away from 0");
}

std::string capture(const std::string& cmd, int& status) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int rc = pclose(pipe);
  status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

void cli_determinism() {
  const std::string cmd = std::string("\"") + HMTK_CLI_PATH +
                          "\" normality --map identity --depth 4 --seed 7 2>/dev/null";
  int status_a = 0, status_b = 0;
  const std::string a = capture(cmd, status_a);
  const std::string b = capture(cmd, status_b);
  require(status_a == 0 && status_b == 0, "nonzero exit status");
  require(!a.empty(), "no output");
  require(a == b, "reruns differ");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds; 0 = untimed
    std::function<void()> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "metric-suite", 5.0, metric_suite},
      {2, "derivative-oracle", 10.0, derivative_oracle},
      {3, "identity-normality", 0.0, identity_normality},
      {4, "automorphism-invariance", 60.0, automorphism_invariance},
      {5, "blowup-detection", 0.0, blowup_detection},
      {6, "pair-functional-agreement", 0.0, pair_functional_agreement},
      {7, "bk-recursion", 1.0, bk_recursion},
      {8, "lens-constants", 5.0, lens_constants},
      {9, "blowup-extraction", 0.0, blowup_extraction},
      {10, "five-point-closed-form", 0.0, five_point_closed_form},
      {11, "boundary-agreement", 0.0, boundary_agreement},
      {12, "cli-determinism", 0.0, cli_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      c.fn();
    } catch (const std::exception& e) {
      reason = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && c.time_limit > 0.0 && secs > c.time_limit)
      reason = "took " + fmt(secs) + " s, limit " + fmt(c.time_limit);
    const bool ok = reason.empty();
    failures += ok ? 0 : 1;
    std::printf("%s %2d %-26s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                ok ? "" : ": ", reason.c_str());
  }
  return failures;
}
