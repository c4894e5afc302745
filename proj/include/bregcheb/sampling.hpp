#ifndef BREGCHEB_SAMPLING_HPP
#define BREGCHEB_SAMPLING_HPP

#include <random>

#include "bregcheb/legendre.hpp"

namespace bregcheb::sampling {

/// Coordinates uniform in (0.1, 10) on orthant domains, (-10, 10) otherwise.
template <class Rng>
Point interior_point(const LegendreFunction& F, Rng& rng) {
  const bool orthant = F.kind() == Kind::NegEntropy || F.kind() == Kind::NegLog;
  std::uniform_real_distribution<double> coord(orthant ? 0.1 : -10.0, 10.0);
  Point p(F.dimension());
  for (auto& v : p) v = coord(rng);
  return p;
}

/// B B^T + J I with B uniform in [-1, 1]: symmetric, eigenvalues >= J.
template <class Rng>
Eigen::MatrixXd spd_matrix(int J, Rng& rng) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  Eigen::MatrixXd B(J, J);
  for (int r = 0; r < J; ++r)
    for (int c = 0; c < J; ++c) B(r, c) = entry(rng);
  return B * B.transpose() + J * Eigen::MatrixXd::Identity(J, J);
}

/// One generator of each kind in dimension J.
template <class Rng>
std::vector<LegendreFunction> all_generators(int J, Rng& rng) {
  return {LegendreFunction::energy(J), LegendreFunction::quadratic(spd_matrix(J, rng)),
          LegendreFunction::neg_entropy(J), LegendreFunction::neg_log(J)};
}

}  // namespace bregcheb::sampling

#endif  // BREGCHEB_SAMPLING_HPP
