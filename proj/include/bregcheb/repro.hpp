#ifndef BREGCHEB_REPRO_HPP
#define BREGCHEB_REPRO_HPP

// Numerical reproduction of the planar segment results: both center solvers
// against the closed forms, the Itakura-Saito phase change, the threshold
// root of k and the convex weights of the IS center.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bregcheb/center.hpp"
#include "bregcheb/closed_form.hpp"
#include "bregcheb/sampling.hpp"

namespace bregcheb::repro {

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Options {
  std::optional<double> tol_override;  // replaces every tolerance below
  int samples = kDefaultSegmentSamples;
};

namespace detail {

inline double max_abs_diff(const Point& a, const Point& b) { return (a - b).lpNorm<Eigen::Infinity>(); }

inline CenterCertificate run_solver(SolverKind kind, const LegendreFunction& F, const EnumeratedSet& S) {
  try {
    return kind == SolverKind::FixedPoint ? solve_fixed_point(F, S, default_start(F, S))
                                          : solve_subgradient(F, S, default_start(F, S));
  } catch (const NonConvergence& e) {
    return e.best();
  }
}

}  // namespace detail

inline std::vector<Check> run(const Options& opt = {}) {
  using namespace closed_form;
  std::vector<Check> checks;
  auto tol = [&](double t) { return opt.tol_override.value_or(t); };
  auto below = [&](std::string name, double measured, double t) {
    checks.push_back({std::move(name), measured, tol(t), measured <= tol(t)});
  };
  auto exact = [&](std::string name, double measured, double expected) {
    checks.push_back({std::move(name), measured, expected, measured == expected});
  };

  const double as[] = {4.0, 8.0, 16.0, 32.0};
  for (const Generator gen : {Generator::Euclidean, Generator::KL, Generator::IS}) {
    const auto F = legendre(gen);
    for (double a : as) {
      const EnumeratedSet S(F, make_segment(F, a, opt.samples));
      const std::string tag = std::string(to_string(gen)) + " a=" + std::to_string(static_cast<int>(a));
      const Point expected = center(gen, a);
      for (const SolverKind kind : {SolverKind::FixedPoint, SolverKind::Subgradient}) {
        const auto cert = detail::run_solver(kind, F, S);
        const std::string who = tag + " " + std::string(to_string(kind));
        const double center_tol = gen == Generator::IS ? 1e-4 : 1e-5;
        below(who + " center error", detail::max_abs_diff(cert.center, expected), center_tol);
        if (gen == Generator::Euclidean) {
          below(who + " membership gap", cert.membership_gap, 1e-6);
          double mu_err = cert.weights.size() == 2 ? 0.0 : 1.0;
          for (double w : cert.weights) mu_err = std::max(mu_err, std::abs(w - 0.5));
          below(who + " weights (1/2, 1/2)", mu_err, 1e-6);
        }
        if (gen == Generator::IS) {
          const auto far = farthest(F, S, cert.center);
          if (g_of(a) < h_of(a)) {
            exact(who + " |Q_C(z)|", static_cast<double>(far.argmax.size()), 2.0);
          } else {
            double nearest = kInf;
            for (const auto& q : far.argmax) nearest = std::min(nearest, (q - c_half(a)).norm());
            below(who + " Q_C(z) reaches c_1/2", nearest, 1e-3);
          }
        }
      }
      if (gen == Generator::KL) {
        const Point rec = reconstruct(gen, a, {0.5, 0.0, 0.5});
        below(tag + " dual midpoint reconstruction", detail::max_abs_diff(rec, expected), 1e-9);
      }
    }
  }

  const double at = threshold_a(1e-12);
  below("threshold |a~ - 17.63|", std::abs(at - 17.63), 0.005);
  below("threshold |k(a~)|", std::abs(k_of(at)), 1e-8);

  for (double a : {4.0, 32.0}) {
    const auto mu = mu_coefficients(a);
    const std::string tag = "IS a=" + std::to_string(static_cast<int>(a)) + " mu";
    double outside = 0.0;
    for (double m : {mu.mu0, mu.mu_half, mu.mu1})
      outside = std::max({outside, -m, m - 1.0});
    below(tag + " in [0,1]", outside, 0.0);
    below(tag + " sum", std::abs(mu.mu0 + mu.mu_half + mu.mu1 - 1.0), 1e-12);
    below(tag + " reconstruction",
          detail::max_abs_diff(reconstruct(Generator::IS, a, mu), center_is(a).center), 1e-9);
  }
  return checks;
}

/// Largest relative residual of the three- and four-point identities, the
/// gradient round trip and Fenchel-Young over `count` random tuples per generator.
inline std::vector<Check> identity_sweep(unsigned long seed, int count,
                                         std::optional<double> tol_override = {}) {
  std::mt19937_64 rng(seed);
  const double tol = tol_override.value_or(kTolerances.identity_residual);
  std::vector<Check> checks;
  for (const auto& F : sampling::all_generators(3, rng)) {
    double three = 0.0, four = 0.0, roundtrip = 0.0, fenchel = 0.0;
    for (int i = 0; i < count; ++i) {
      const Point x = sampling::interior_point(F, rng);
      const Point y = sampling::interior_point(F, rng);
      const Point z = sampling::interior_point(F, rng);
      const Point w = sampling::interior_point(F, rng);
      three = std::max(three, std::abs(three_point_residual(F, x, y, z)) / (1.0 + distance(F, x, z)));
      four = std::max(four, std::abs(four_point_residual(F, x, y, z, w)) /
                                (1.0 + distance(F, y, z) + distance(F, x, w)));
      const Point gx = grad_f(F, x);
      roundtrip = std::max(roundtrip, (grad_f_star(F, gx) - x).norm());
      fenchel = std::max(fenchel, std::abs(eval_f(F, x) + eval_f_star(F, gx) - x.dot(gx)));
    }
    const std::string tag = "sweep " + std::string(to_string(F.kind())) + " ";
    for (const auto& [name, value] : {std::pair{"three-point", three}, {"four-point", four},
                                      {"gradient round trip", roundtrip}, {"Fenchel-Young", fenchel}})
      checks.push_back({tag + name, value, tol, value <= tol});
  }
  return checks;
}

}  // namespace bregcheb::repro

#endif  // BREGCHEB_REPRO_HPP
