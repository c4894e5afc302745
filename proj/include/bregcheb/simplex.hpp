#ifndef BREGCHEB_SIMPLEX_HPP
#define BREGCHEB_SIMPLEX_HPP

// Minimum-norm point of the convex hull of finitely many vectors:
//   min over the unit simplex of | sum_i w_i v_i |.
// Up to three vertices the problem is solved exactly by enumerating the
// faces; larger inputs use Wolfe's minimum-norm-point algorithm.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "bregcheb/errors.hpp"

namespace bregcheb {

struct HullPoint {
  std::vector<double> weights;  // one per vertex, on the unit simplex
  Eigen::VectorXd point;        // sum_i weights[i] * v_i
  double norm = 0.0;
};

namespace detail {

/// Minimizer of |sum a_i v_i| over the affine hull (sum a_i = 1) of the
/// selected vertices.  Rank-deficient systems get the minimum-norm solution.
inline Eigen::VectorXd affine_minimizer(std::span<const Eigen::VectorXd> v,
                                        const std::vector<std::size_t>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b <= a; ++b) {
      kkt(a, b) = kkt(b, a) = v[idx[a]].dot(v[idx[b]]);
    }
    kkt(a, k) = kkt(k, a) = 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs[k] = 1.0;
  Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  Eigen::VectorXd alpha = sol.head(k);
  const double s = alpha.sum();
  if (std::abs(s) > 0.0) alpha /= s;
  return alpha;
}

inline HullPoint assemble(std::span<const Eigen::VectorXd> v, std::vector<double> w) {
  HullPoint out;
  out.point = Eigen::VectorXd::Zero(v.front().size());
  double total = 0.0;
  for (double& wi : w) {
    wi = std::max(wi, 0.0);
    total += wi;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] /= total;
    out.point += w[i] * v[i];
  }
  out.norm = out.point.norm();
  out.weights = std::move(w);
  return out;
}

inline HullPoint min_norm_small(std::span<const Eigen::VectorXd> v) {
  const std::size_t n = v.size();
  HullPoint best;
  best.norm = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const Eigen::VectorXd alpha = affine_minimizer(v, idx);
    if ((alpha.array() < -1e-14).any()) continue;
    std::vector<double> w(n, 0.0);
    for (std::size_t a = 0; a < idx.size(); ++a) w[idx[a]] = alpha[a];
    HullPoint cand = assemble(v, std::move(w));
    if (cand.norm < best.norm) best = std::move(cand);
  }
  return best;
}

inline HullPoint min_norm_wolfe(std::span<const Eigen::VectorXd> v, int max_iter) {
  const std::size_t n = v.size();
  double scale = 0.0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    scale = std::max(scale, v[i].squaredNorm());
    if (v[i].squaredNorm() < v[start].squaredNorm()) start = i;
  }
  const double eps = 1e-15 * std::max(scale, 1e-300);
  constexpr double kWeightEps = 1e-14;

  std::vector<std::size_t> active{start};
  std::vector<double> lambda{1.0};
  Eigen::VectorXd x = v[start];

  for (int major = 0; major < max_iter; ++major) {
    std::size_t j = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double d = x.dot(v[i]);
      if (d < best) {
        best = d;
        j = i;
      }
    }
    if (x.squaredNorm() - best <= eps) break;
    if (std::find(active.begin(), active.end(), j) != active.end()) break;
    active.push_back(j);
    lambda.push_back(0.0);

    for (int minor = 0; minor < static_cast<int>(n) + 2; ++minor) {
      const Eigen::VectorXd alpha = affine_minimizer(v, active);
      if ((alpha.array() > kWeightEps).all()) {
        lambda.assign(alpha.data(), alpha.data() + alpha.size());
        break;
      }
      double theta = 1.0;
      for (std::size_t a = 0; a < active.size(); ++a) {
        if (alpha[a] <= kWeightEps) {
          const double denom = lambda[a] - alpha[a];
          if (denom > 0.0) theta = std::min(theta, lambda[a] / denom);
        }
      }
      for (std::size_t a = 0; a < active.size(); ++a)
        lambda[a] = theta * alpha[a] + (1.0 - theta) * lambda[a];
      std::size_t drop = 0;
      for (std::size_t a = 1; a < active.size(); ++a)
        if (lambda[a] < lambda[drop]) drop = a;
      std::vector<std::size_t> keep_idx;
      std::vector<double> keep_lambda;
      for (std::size_t a = 0; a < active.size(); ++a) {
        if (a == drop || lambda[a] <= kWeightEps) continue;
        keep_idx.push_back(active[a]);
        keep_lambda.push_back(lambda[a]);
      }
      active = std::move(keep_idx);
      lambda = std::move(keep_lambda);
      const double total = [&] {
        double s = 0.0;
        for (double l : lambda) s += l;
        return s;
      }();
      for (double& l : lambda) l /= total;
    }
    x.setZero();
    for (std::size_t a = 0; a < active.size(); ++a) x += lambda[a] * v[active[a]];
  }

  std::vector<double> w(n, 0.0);
  for (std::size_t a = 0; a < active.size(); ++a) w[active[a]] = lambda[a];
  return assemble(v, std::move(w));
}

}  // namespace detail

inline HullPoint min_norm_in_hull(std::span<const Eigen::VectorXd> vertices) {
  if (vertices.empty()) throw InvalidInput("min_norm_in_hull: no vertices");
  if (vertices.size() <= 3) return detail::min_norm_small(vertices);
  return detail::min_norm_wolfe(vertices, 1000);
}

/// Best simplex weights for approximating target by the hull of points.
inline HullPoint fit_simplex_weights(const Eigen::VectorXd& target,
                                     std::span<const Eigen::VectorXd> points) {
  std::vector<Eigen::VectorXd> shifted;
  shifted.reserve(points.size());
  for (const auto& p : points) shifted.push_back(target - p);
  return min_norm_in_hull(shifted);
}

}  // namespace bregcheb

#endif  // BREGCHEB_SIMPLEX_HPP
