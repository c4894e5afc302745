#ifndef BREGCHEB_CLOSED_FORM_HPP
#define BREGCHEB_CLOSED_FORM_HPP

// Exact results for the planar segment C = conv{(1, a), (a, 1)}, a > 1,
// under the halved squared Euclidean distance, Kullback-Leibler and
// Itakura-Saito.  Every center lies on the diagonal.

#include <cmath>
#include <string_view>
#include <vector>

#include "bregcheb/bregman.hpp"

namespace bregcheb::closed_form {

enum class Generator { Euclidean, KL, IS };

inline std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::Euclidean: return "euclidean";
    case Generator::KL: return "kl";
    case Generator::IS: return "is";
  }
  return "?";
}

inline LegendreFunction legendre(Generator g) {
  switch (g) {
    case Generator::Euclidean: return LegendreFunction::energy(2);
    case Generator::KL: return LegendreFunction::neg_entropy(2);
    case Generator::IS: return LegendreFunction::neg_log(2);
  }
  throw InvalidInput("unknown generator");
}

inline void check_a(double a) {
  if (!(a > 1.0) || !std::isfinite(a)) throw InvalidInput("segment parameter a must exceed 1");
}

inline Point c0(double a) { return Point{{1.0, a}}; }
inline Point c1(double a) { return Point{{a, 1.0}}; }
inline Point c_half(double a) { return Point{{0.5 * (1.0 + a), 0.5 * (1.0 + a)}}; }

inline Point diagonal(double t) { return Point{{t, t}}; }

inline Point center_euclidean(double a) {
  check_a(a);
  return diagonal(0.5 * (1.0 + a));
}

inline Point center_kl(double a) {
  check_a(a);
  return diagonal(std::sqrt(a));
}

inline double g_of(double a) {
  check_a(a);
  return a * (a + 1.0) / ((a - 1.0) * (a - 1.0)) * std::log((a + 1.0) * (a + 1.0) / (4.0 * a));
}

inline double h_of(double a) {
  check_a(a);
  return 2.0 * a / (a + 1.0);
}

/// Positive exactly where h > g; k(1) = 0.
inline double k_of(double x) {
  if (!(x >= 1.0)) throw InvalidInput("k is defined for x >= 1");
  const double r = (x - 1.0) / (x + 1.0);
  return 2.0 * r * r - 2.0 * std::log(x + 1.0) + std::log(4.0 * x);
}

/// Maximizer of k: 3 + 2 sqrt 2.
inline double xi() { return 3.0 + 2.0 * std::sqrt(2.0); }

/// Unique root of k on ]xi, inf[ by bisection on [xi, 1e6] to bracket width tol.
inline double threshold_a(double tol = 1e-12) {
  if (!(tol > 0.0)) throw InvalidInput("threshold tolerance must be positive");
  double lo = xi();
  double hi = 1e6;
  if (!(k_of(lo) > 0.0 && k_of(hi) < 0.0)) throw std::logic_error("k does not change sign");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (k_of(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Farthest points named by their segment parameter lambda (0, 1/2 or 1).
struct FarthestDescriptor {
  std::vector<double> lambdas;
  double kl_sign_driver = 0.0;  // D(x, c0) - D(x, c1) for KL, else 0
};

struct IsCenter {
  Point center;
  std::vector<double> lambdas;  // farthest points of the center
  bool harmonic_branch = false; // g < h
};

inline IsCenter center_is(double a) {
  const double g = g_of(a);
  const double h = h_of(a);
  if (g < h) return {diagonal(h), {0.0, 1.0}, true};
  return {diagonal(g), {0.0, 0.5, 1.0}, false};
}

struct MuCoefficients {
  double mu0 = 0.0;
  double mu_half = 0.0;
  double mu1 = 0.0;
};

/// Convex weights with center_is(a) = grad f*(sum mu grad f(c)) for the IS generator.
inline MuCoefficients mu_coefficients(double a) {
  check_a(a);
  if (g_of(a) < h_of(a)) return {0.5, 0.0, 0.5};
  const double am1 = (a - 1.0) * (a - 1.0);
  const double ell = std::log((a + 1.0) * (a + 1.0) / (4.0 * a));
  const double outer = (am1 - 2.0 * a * ell) / (am1 * ell);
  const double mid = (-2.0 * am1 + (a + 1.0) * (a + 1.0) * ell) / (am1 * ell);
  return {outer, mid, outer};
}

/// grad f*(mu0 grad f(c0) + mu_half grad f(c_half) + mu1 grad f(c1)).
inline Point reconstruct(Generator gen, double a, const MuCoefficients& mu) {
  const auto F = legendre(gen);
  const Point mix = mu.mu0 * grad_f(F, c0(a)) + mu.mu_half * grad_f(F, c_half(a)) +
                    mu.mu1 * grad_f(F, c1(a));
  return grad_f_star(F, mix);
}

/// Farthest points of x in the segment.  Euclidean and KL reduce to the
/// endpoints and are ordered by the sign of x1 - x2.  IS is known in closed
/// form on the diagonal only: {c0, c1} above g, {c_half} below, all three at g.
inline FarthestDescriptor farthest_structure(Generator gen, double a, const Point& x) {
  check_a(a);
  if (x.size() != 2) throw InvalidInput("farthest_structure expects a planar point");
  FarthestDescriptor out;
  if (gen == Generator::IS) {
    if (x[0] != x[1]) throw InvalidInput("IS farthest structure is only known on the diagonal");
    if (!(x[0] > 0.0)) throw DomainError("IS farthest structure needs a point in U");
    const double g = g_of(a);
    if (x[0] > g) out.lambdas = {0.0, 1.0};
    else if (x[0] < g) out.lambdas = {0.5};
    else out.lambdas = {0.0, 0.5, 1.0};
    return out;
  }
  if (x[1] < x[0]) out.lambdas = {0.0};
  else if (x[0] < x[1]) out.lambdas = {1.0};
  else out.lambdas = {0.0, 1.0};
  if (gen == Generator::KL) {
    const auto F = legendre(gen);
    out.kl_sign_driver = distance(F, x, c0(a)) - distance(F, x, c1(a));
  }
  return out;
}

/// (x1 - x2) ln a, the closed form of D(x, c0) - D(x, c1) under KL.
inline double kl_sign_driver_formula(double a, const Point& x) { return (x[0] - x[1]) * std::log(a); }

/// Center for any of the three generators.
inline Point center(Generator gen, double a) {
  switch (gen) {
    case Generator::Euclidean: return center_euclidean(a);
    case Generator::KL: return center_kl(a);
    case Generator::IS: return center_is(a).center;
  }
  throw InvalidInput("unknown generator");
}

}  // namespace bregcheb::closed_form

#endif  // BREGCHEB_CLOSED_FORM_HPP
