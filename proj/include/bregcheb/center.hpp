#ifndef BREGCHEB_CENTER_HPP
#define BREGCHEB_CENTER_HPP

// Chebyshev center z = argmin F_C.  A point z in U is the center iff
//   grad f(z) lies in conv grad f(Q_C(z)),
// which certify() checks by fitting simplex weights.
//
// solve_fixed_point works on the concave dual
//   max over w in the simplex of  sum_i w_i f*(t_i) - f*(sum_i w_i t_i),  t_i = grad f(c_i),
// whose Frank-Wolfe step is the update  x <- grad f*((1-eta) grad f(x) + eta grad f(q)),
// q in Q_C(x).  Its duality gap equals F_C(x) - sum_i w_i D(x, c_i).
//
// solve_subgradient is a primal method: descent along minus the minimum-norm
// element of the (epsilon-enlarged) subdifferential, then Newton's method on
// the optimality system over small candidate subsets of nearly farthest points.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bregcheb/farthest.hpp"
#include "bregcheb/hull_descent.hpp"
#include "bregcheb/simplex.hpp"

namespace bregcheb {

enum class SolverKind { FixedPoint, Subgradient, ClosedForm };

inline std::string_view to_string(SolverKind s) {
  switch (s) {
    case SolverKind::FixedPoint: return "fixed";
    case SolverKind::Subgradient: return "subgrad";
    case SolverKind::ClosedForm: return "closed";
  }
  return "?";
}

struct CenterCertificate {
  Point center;
  double radius = kInf;
  std::vector<Point> farthest;
  std::vector<std::size_t> farthest_indices;
  std::vector<double> weights;  // one per farthest point
  double membership_gap = kInf;
  int iterations = 0;
  SolverKind solver = SolverKind::ClosedForm;
  bool valid = false;
};

/// The solver ran out of iterations with an uncertified iterate.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(CenterCertificate best)
      : std::runtime_error("center solver did not converge (membership gap " +
                           std::to_string(best.membership_gap) + ")"),
        best_(std::move(best)) {}
  const CenterCertificate& best() const noexcept { return best_; }

 private:
  CenterCertificate best_;
};

struct SolverOptions {
  int max_iter = 20000;
  double tol = 1e-12;  // relative to max(1, F_C)
  double gap_tol = kTolerances.gap;
  Schedule schedule = Schedule::PairwiseLineSearch;
};

inline CenterCertificate certify(const LegendreFunction& F, const EnumeratedSet& S, const Point& z,
                                 double gap_tol = kTolerances.gap,
                                 const Tolerances& tol = kTolerances) {
  if (!in_interior(F, z)) throw DomainError("certify: candidate center outside int dom f");
  const auto far = farthest(F, S, z, tol);
  CenterCertificate cert;
  cert.center = z;
  cert.radius = far.value;
  cert.farthest = far.argmax;
  cert.farthest_indices = far.witness_indices;
  std::vector<Point> grads;
  for (std::size_t i : far.witness_indices) grads.push_back(S.grads[i]);
  const auto fit = fit_simplex_weights(grad_f(F, z), grads);
  cert.weights = fit.weights;
  cert.membership_gap = fit.norm;
  const bool multivalued = S.distinct < 2 || far.argmax.size() >= 2;
  cert.valid = cert.membership_gap <= gap_tol && multivalued;
  return cert;
}

inline CenterCertificate certify(const LegendreFunction& F, const CompactSet& C, const Point& z,
                                 double gap_tol = kTolerances.gap) {
  return certify(F, EnumeratedSet(F, C), z, gap_tol);
}

/// grad f*(mean of grad f(c)), always in U.
inline Point default_start(const LegendreFunction& F, const EnumeratedSet& S) {
  Point mean = Point::Zero(F.dimension());
  for (const auto& t : S.grads) mean += t;
  mean /= static_cast<double>(S.size());
  return grad_f_star(F, mean);
}

namespace detail {

inline CenterCertificate finish(const LegendreFunction& F, const EnumeratedSet& S, const Point& z,
                                int iterations, SolverKind kind, bool converged,
                                const SolverOptions& opt) {
  auto cert = certify(F, S, z, opt.gap_tol);
  cert.iterations = iterations;
  cert.solver = kind;
  if (!converged && cert.membership_gap > 100.0 * opt.tol) throw NonConvergence(cert);
  return cert;
}

}  // namespace detail

inline CenterCertificate solve_fixed_point(const LegendreFunction& F, const EnumeratedSet& S,
                                           const Point& x0, const SolverOptions& opt = {}) {
  if (!in_interior(F, x0)) throw DomainError("solve_fixed_point: start outside int dom f");
  const auto start = farthest(F, S, x0).witness_indices.front();
  std::vector<double> conj(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) conj[i] = eval_f_star(F, S.grads[i]);

  const double scale = std::max(1.0, farthest_value(F, S, default_start(F, S)));
  const auto res =
      hull_descent(F, S.grads, conj, start, opt.max_iter, opt.tol * scale, opt.schedule);
  return detail::finish(F, S, res.primal, res.iterations, SolverKind::FixedPoint, res.converged,
                        opt);
}

inline CenterCertificate solve_fixed_point(const LegendreFunction& F, const CompactSet& C,
                                           const SolverOptions& opt = {}) {
  const EnumeratedSet S(F, C);
  return solve_fixed_point(F, S, default_start(F, S), opt);
}

namespace detail {

struct KktSolution {
  Point x;
  Eigen::VectorXd weights;
  double radius = 0.0;
  bool ok = false;
};

/// Newton's method on
///   grad f(x) = sum_i w_i grad f(c_i),  D(x, c_i) = r,  sum_i w_i = 1
/// for the points c_i indexed by subset.
inline KktSolution kkt_newton(const LegendreFunction& F, const EnumeratedSet& S,
                              const std::vector<std::size_t>& subset, const Point& x_start) {
  const Eigen::Index J = F.dimension();
  const auto k = static_cast<Eigen::Index>(subset.size());
  const Eigen::Index n = J + k + 1;

  KktSolution sol;
  sol.x = x_start;
  sol.weights = Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k));
  sol.radius = 0.0;
  for (std::size_t i : subset) sol.radius += distance(F, x_start, S.points[i]) / k;

  auto residual = [&](const Point& x, const Eigen::VectorXd& w, double r) {
    Eigen::VectorXd res(n);
    Point mix = Point::Zero(J);
    for (Eigen::Index a = 0; a < k; ++a) mix += w[a] * S.grads[subset[a]];
    res.head(J) = grad_f(F, x) - mix;
    for (Eigen::Index a = 0; a < k; ++a) res[J + a] = distance(F, x, S.points[subset[a]]) - r;
    res[J + k] = w.sum() - 1.0;
    return res;
  };

  Eigen::VectorXd res = residual(sol.x, sol.weights, sol.radius);
  for (int it = 0; it < 60; ++it) {
    const double scale = 1.0 + std::abs(sol.radius) + grad_f(F, sol.x).lpNorm<Eigen::Infinity>();
    if (res.lpNorm<Eigen::Infinity>() <= 1e-14 * scale) {
      sol.ok = true;
      return sol;
    }
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    const Point gx = grad_f(F, sol.x);
    jac.topLeftCorner(J, J) = hess_f(F, sol.x);
    for (Eigen::Index a = 0; a < k; ++a) {
      const Point& t = S.grads[subset[a]];
      jac.block(0, J + a, J, 1) = -t;
      jac.block(J + a, 0, 1, J) = (gx - t).transpose();
      jac(J + a, J + k) = -1.0;
      jac(J + k, J + a) = 1.0;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
    if (!lu.isInvertible()) return sol;
    const Eigen::VectorXd step = lu.solve(-res);

    double alpha = 1.0;
    bool moved = false;
    for (int h = 0; h < 50; ++h, alpha *= 0.5) {
      const Point x = sol.x + alpha * step.head(J);
      if (!in_interior(F, x)) continue;
      const Eigen::VectorXd w = sol.weights + alpha * step.segment(J, k);
      const double r = sol.radius + alpha * step[J + k];
      const Eigen::VectorXd trial = residual(x, w, r);
      if (trial.norm() < res.norm() || h == 49) {
        sol.x = x;
        sol.weights = w;
        sol.radius = r;
        res = trial;
        moved = true;
        break;
      }
    }
    if (!moved) return sol;
  }
  const double scale = 1.0 + std::abs(sol.radius) + grad_f(F, sol.x).lpNorm<Eigen::Infinity>();
  sol.ok = res.lpNorm<Eigen::Infinity>() <= 1e-11 * scale;
  return sol;
}

/// Calls visit on every subset of {0..m-1} with the given size until it returns true.
inline bool for_each_subset(std::size_t m, std::size_t size,
                            const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  if (size > m) return false;
  for (;;) {
    if (visit(idx)) return true;
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == m - size + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < size; ++q) idx[q] = idx[q - 1] + 1;
  }
}

inline double binomial(std::size_t m, std::size_t k) {
  double b = 1.0;
  for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<double>(m - k + i) / static_cast<double>(i);
  return b;
}

/// Searches subsets of the nearly farthest points of x for one whose
/// optimality system has a solution that is farthest from no other point of C.
inline bool refine_active_set(const LegendreFunction& F, const EnumeratedSet& S, Point& x,
                              int& newton_calls) {
  const auto d = distances_to(F, S, x);
  const double fx = *std::max_element(d.begin(), d.end());
  const std::size_t max_size = static_cast<std::size_t>(F.dimension()) + 1;

  for (double level : {1e-8, 1e-6, 1e-4, 1e-3, 1e-2}) {
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < fx - level * (1.0 + fx)) continue;
      const bool dup = std::any_of(cand.begin(), cand.end(),
                                   [&](std::size_t j) { return S.points[j] == S.points[i]; });
      if (!dup) cand.push_back(i);
    }
    double work = 0.0;
    for (std::size_t size = 1; size <= std::min(max_size, cand.size()); ++size)
      work += binomial(cand.size(), size);
    if (work > 20000.0) break;

    for (std::size_t size = 1; size <= std::min(max_size, cand.size()); ++size) {
      Point found;
      const bool hit = for_each_subset(cand.size(), size, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::size_t> subset;
        for (std::size_t p : pick) subset.push_back(cand[p]);
        ++newton_calls;
        const auto sol = kkt_newton(F, S, subset, x);
        if (!sol.ok || (sol.weights.array() < -1e-12).any()) return false;
        const double value = farthest_value(F, S, sol.x);
        if (value > sol.radius + 1e-12 * (1.0 + std::abs(sol.radius))) return false;
        found = sol.x;
        return true;
      });
      if (hit) {
        x = found;
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

inline CenterCertificate solve_subgradient(const LegendreFunction& F, const EnumeratedSet& S,
                                           const Point& x0, const SolverOptions& opt = {}) {
  if (!in_interior(F, x0)) throw DomainError("solve_subgradient: start outside int dom f");
  Point x = x0;
  double fx = farthest_value(F, S, x);
  const double scale = std::max(1.0, fx);
  double eps = 0.1 * scale;
  const double eps_min = opt.tol * scale;

  double lipschitz = 0.0;
  for (const auto& v : subdifferential(F, S, x)) lipschitz = std::max(lipschitz, v.norm());
  double step = lipschitz > 0.0 ? 1.0 / lipschitz : 1.0;

  int it = 0;
  for (; it < opt.max_iter && fx > 0.0; ++it) {
    const auto d = distances_to(F, S, x);
    const Point gx = grad_f(F, x);
    std::vector<Point> verts;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < fx - eps) continue;
      Point v = gx - S.grads[i];
      const bool dup = std::any_of(verts.begin(), verts.end(), [&](const Point& w) {
        return (w - v).lpNorm<Eigen::Infinity>() <= kTolerances.vertex_dedup;
      });
      if (!dup) verts.push_back(std::move(v));
    }
    const auto mn = min_norm_in_hull(verts);
    const Point dir = -mn.point;
    const double decrease = mn.norm * mn.norm;

    bool accepted = false;
    if (decrease > eps) {
      double t = std::min(2.0 * step, 1e6);
      for (int h = 0; h < 60; ++h, t *= 0.5) {
        const Point xn = x + t * dir;
        if (!in_interior(F, xn)) continue;
        const double fn = farthest_value(F, S, xn);
        if (fn <= fx - 0.5 * t * decrease) {
          x = xn;
          fx = fn;
          step = t;
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) {
      if (eps <= eps_min) break;
      eps *= 0.1;
    }
  }

  int newton_calls = 0;
  const bool refined = S.size() == 1 ? true : detail::refine_active_set(F, S, x, newton_calls);
  if (S.distinct == 1) x = S.points.front();
  return detail::finish(F, S, x, it + newton_calls, SolverKind::Subgradient, refined, opt);
}

inline CenterCertificate solve_subgradient(const LegendreFunction& F, const CompactSet& C,
                                           const SolverOptions& opt = {}) {
  const EnumeratedSet S(F, C);
  return solve_subgradient(F, S, default_start(F, S), opt);
}

struct ProjectionResult {
  Point point;
  std::vector<double> weights;  // one per enumerated point of C
  bool degenerate = false;      // x already lies in grad f*(conv grad f(C))
  double gap = 0.0;
};

/// y = grad f*(y*), y* the minimizer of D_{f*}(., grad f(x)) over conv grad f(C).
/// Equivalently y minimizes D(x, .) over grad f*(conv grad f(C)), and
/// D(x, c) >= D(x, y) + D(y, c) for every c in C.
inline ProjectionResult dual_hull_projection(const LegendreFunction& F, const EnumeratedSet& S,
                                             const Point& x, int max_iter = 100000) {
  if (!in_interior(F, x)) throw DomainError("dual_hull_projection: x outside int dom f");
  const Point gx = grad_f(F, x);
  ProjectionResult out;
  const auto fit = fit_simplex_weights(gx, S.grads);
  if (fit.norm <= 1e-10 * (1.0 + gx.norm())) {
    out.point = x;
    out.weights = fit.weights;
    out.degenerate = true;
    return out;
  }
  std::vector<double> linear(S.size());
  std::size_t start = 0;
  double nearest = kInf;
  for (std::size_t i = 0; i < S.size(); ++i) {
    linear[i] = x.dot(S.grads[i]);
    const double d = distance(F, x, S.points[i]);
    if (d < nearest) {
      nearest = d;
      start = i;
    }
  }
  const double tol = 1e-14 * (1.0 + nearest);
  const auto res = hull_descent(F, S.grads, linear, start, max_iter, tol);
  out.point = res.primal;
  out.weights = res.weights;
  out.gap = res.gap;
  return out;
}

inline ProjectionResult dual_hull_projection(const LegendreFunction& F, const CompactSet& C,
                                             const Point& x) {
  return dual_hull_projection(F, EnumeratedSet(F, C), x);
}

}  // namespace bregcheb

#endif  // BREGCHEB_CENTER_HPP
