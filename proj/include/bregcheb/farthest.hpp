#ifndef BREGCHEB_FARTHEST_HPP
#define BREGCHEB_FARTHEST_HPP

// Right farthest-distance function F_C(x) = max_{c in C} D(x, c), the
// farthest-point map Q_C, directional derivatives and subdifferentials.

#include <algorithm>
#include <limits>
#include <vector>

#include "bregcheb/bregman.hpp"
#include "bregcheb/compact_set.hpp"

namespace bregcheb {

/// The enumerated points of a validated set together with their gradients.
struct EnumeratedSet {
  std::vector<Point> points;
  std::vector<Point> grads;
  std::size_t distinct = 0;

  EnumeratedSet(const LegendreFunction& F, const CompactSet& C) {
    validate(C, F);
    points = C.enumerate();
    grads.reserve(points.size());
    for (const auto& p : points) grads.push_back(grad_f(F, p));
    distinct = C.distinct_count();
  }

  std::size_t size() const noexcept { return points.size(); }
};

struct FarthestResult {
  double value = kInf;
  std::vector<Point> argmax;
  std::vector<std::size_t> witness_indices;
};

/// Threshold a distance must reach to count as a maximizer of value.
inline double argmax_threshold(double value, const Tolerances& tol = kTolerances) {
  return value * (1.0 - tol.argmax_rel) - tol.argmax_abs;
}

inline double farthest_value(const LegendreFunction& F, const EnumeratedSet& S, const Point& x) {
  F.check_dimension(x);
  if (!in_domain(F, x)) return kInf;
  double best = -kInf;
  for (const auto& c : S.points) best = std::max(best, distance(F, x, c));
  return best;
}

/// All distances D(x, c) in enumeration order.
inline std::vector<double> distances_to(const LegendreFunction& F, const EnumeratedSet& S,
                                        const Point& x) {
  std::vector<double> d;
  d.reserve(S.size());
  for (const auto& c : S.points) d.push_back(distance(F, x, c));
  return d;
}

inline FarthestResult farthest(const LegendreFunction& F, const EnumeratedSet& S, const Point& x,
                               const Tolerances& tol = kTolerances) {
  F.check_dimension(x);
  FarthestResult out;
  if (!in_domain(F, x)) return out;
  const auto d = distances_to(F, S, x);
  out.value = *std::max_element(d.begin(), d.end());
  const double cut = argmax_threshold(out.value, tol);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= cut) {
      out.argmax.push_back(S.points[i]);
      out.witness_indices.push_back(i);
    }
  }
  return out;
}

inline FarthestResult farthest(const LegendreFunction& F, const CompactSet& C, const Point& x,
                               const Tolerances& tol = kTolerances) {
  return farthest(F, EnumeratedSet(F, C), x, tol);
}

/// F_C'(x; h) = max over y in Q_C(x) of f'(x; h) - <h, grad f(y)>.
///
/// For x on the boundary of dom f only the case x + h in U is supported,
/// where the derivative is -inf; other boundary queries raise DomainError.
inline double directional_derivative(const LegendreFunction& F, const EnumeratedSet& S,
                                     const Point& x, const Point& h,
                                     const Tolerances& tol = kTolerances) {
  F.check_dimension(h);
  if (!in_domain(F, x)) throw DomainError("directional_derivative: x outside dom f");
  if (!in_interior(F, x)) {
    if (in_interior(F, Point(x + h))) return -kInf;
    throw DomainError("directional_derivative: unsupported boundary query");
  }
  if (h.isZero(0.0)) return 0.0;
  const auto far = farthest(F, S, x, tol);
  const Point gx = grad_f(F, x);
  double best = -kInf;
  for (std::size_t i : far.witness_indices) best = std::max(best, h.dot(gx - S.grads[i]));
  return best;
}

inline double directional_derivative(const LegendreFunction& F, const CompactSet& C,
                                     const Point& x, const Point& h) {
  return directional_derivative(F, EnumeratedSet(F, C), x, h);
}

/// Vertices grad f(x) - grad f(y), y in Q_C(x); the subdifferential of F_C
/// at x is their convex hull.
inline std::vector<Point> subdifferential(const LegendreFunction& F, const EnumeratedSet& S,
                                          const Point& x, const Tolerances& tol = kTolerances) {
  if (!in_interior(F, x)) throw DomainError("subdifferential: x outside int dom f");
  const auto far = farthest(F, S, x, tol);
  const Point gx = grad_f(F, x);
  std::vector<Point> verts;
  for (std::size_t i : far.witness_indices) {
    Point v = gx - S.grads[i];
    const bool dup = std::any_of(verts.begin(), verts.end(), [&](const Point& w) {
      return (w - v).lpNorm<Eigen::Infinity>() <= tol.vertex_dedup;
    });
    if (!dup) verts.push_back(std::move(v));
  }
  return verts;
}

inline std::vector<Point> subdifferential(const LegendreFunction& F, const CompactSet& C,
                                          const Point& x) {
  return subdifferential(F, EnumeratedSet(F, C), x);
}

/// min over q_x in Q_C(x), q_y in Q_C(y) of <x - y, grad f(q_y) - grad f(q_x)>.
/// Nonnegative because -grad f o Q_C is monotone.
inline double monotonicity_witness(const LegendreFunction& F, const EnumeratedSet& S,
                                   const Point& x, const Point& y,
                                   const Tolerances& tol = kTolerances) {
  if (!in_domain(F, x) || !in_domain(F, y))
    throw DomainError("monotonicity_witness: points must lie in dom f");
  const auto qx = farthest(F, S, x, tol);
  const auto qy = farthest(F, S, y, tol);
  const Point diff = x - y;
  double best = kInf;
  for (std::size_t i : qx.witness_indices)
    for (std::size_t j : qy.witness_indices)
      best = std::min(best, diff.dot(S.grads[j] - S.grads[i]));
  return best;
}

inline double monotonicity_witness(const LegendreFunction& F, const CompactSet& C, const Point& x,
                                   const Point& y) {
  return monotonicity_witness(F, EnumeratedSet(F, C), x, y);
}

}  // namespace bregcheb

#endif  // BREGCHEB_FARTHEST_HPP
