#ifndef BREGCHEB_HULL_DESCENT_HPP
#define BREGCHEB_HULL_DESCENT_HPP

// Minimization of  phi(w) = f*(sum_i w_i t_i) - <b, w>  over the unit simplex,
// where t_i are points of int dom f*.  Both the Chebyshev-center dual
// (b_i = f*(t_i)) and the projection onto the dual hull (b_i = <x, t_i>)
// have this form.  The partial derivative in w_i is <t_i, y> - b_i with
// y = grad f*(sum w t).

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "bregcheb/legendre.hpp"

namespace bregcheb {

enum class Schedule {
  PairwiseLineSearch,  // pairwise Frank-Wolfe with exact line search
  Harmonic,            // classic step 1/(t+2) toward the best vertex
};

struct HullDescentResult {
  std::vector<double> weights;  // dense, one per atom
  Point dual;                   // sum_i w_i t_i
  Point primal;                 // grad f*(dual)
  double gap = kInf;            // Frank-Wolfe duality gap at the final iterate
  int iterations = 0;
  bool converged = false;
};

inline HullDescentResult hull_descent(const LegendreFunction& F, std::span<const Point> atoms,
                                      std::span<const double> linear, std::size_t start,
                                      int max_iter, double tol,
                                      Schedule schedule = Schedule::PairwiseLineSearch) {
  const std::size_t n = atoms.size();
  if (n == 0 || linear.size() != n || start >= n)
    throw InvalidInput("hull_descent: inconsistent inputs");

  std::map<std::size_t, double> support{{start, 1.0}};
  std::vector<double> grad(n);
  HullDescentResult out;

  auto dual_point = [&] {
    Point t = Point::Zero(F.dimension());
    for (const auto& [i, w] : support) t += w * atoms[i];
    return t;
  };

  int it = 0;
  for (;; ++it) {
    out.dual = dual_point();
    out.primal = grad_f_star(F, out.dual);
    for (std::size_t i = 0; i < n; ++i) grad[i] = atoms[i].dot(out.primal) - linear[i];
    const std::size_t s = static_cast<std::size_t>(
        std::min_element(grad.begin(), grad.end()) - grad.begin());
    double mean = 0.0;
    std::size_t v = support.begin()->first;
    for (const auto& [i, w] : support) {
      mean += w * grad[i];
      if (grad[i] > grad[v]) v = i;
    }
    out.gap = std::max(mean - grad[s], 0.0);
    if (out.gap <= tol) {
      out.converged = true;
      break;
    }
    if (it >= max_iter) break;

    if (schedule == Schedule::Harmonic) {
      const double eta = 1.0 / (it + 2.0);
      for (auto& [i, w] : support) w *= 1.0 - eta;
      support[s] += eta;
      continue;
    }

    // Move mass from v to s; phi restricted to this direction is convex.
    const double eta_max = support[v];
    const Point dir = atoms[s] - atoms[v];
    const double dlin = linear[s] - linear[v];
    auto slope = [&](double eta) {
      return grad_f_star(F, Point(out.dual + eta * dir)).dot(dir) - dlin;
    };
    double eta = eta_max;
    if (slope(eta_max) > 0.0) {
      double lo = 0.0, hi = eta_max;
      for (int k = 0; k < 200 && hi - lo > 0.0; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (slope(mid) > 0.0 ? hi : lo) = mid;
      }
      eta = 0.5 * (lo + hi);
    }
    support[s] += eta;
    if (eta >= eta_max) {
      support.erase(v);
    } else {
      support[v] -= eta;
    }
  }

  out.iterations = it;
  out.weights.assign(n, 0.0);
  for (const auto& [i, w] : support) out.weights[i] = w;
  return out;
}

}  // namespace bregcheb

#endif  // BREGCHEB_HULL_DESCENT_HPP
