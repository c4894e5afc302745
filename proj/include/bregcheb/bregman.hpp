#ifndef BREGCHEB_BREGMAN_HPP
#define BREGCHEB_BREGMAN_HPP

#include <cmath>
#include <optional>
#include <string_view>

#include "bregcheb/legendre.hpp"

namespace bregcheb {

/// Right Bregman distance D(x, y) = f(x) - f(y) - <grad f(y), x - y>.
///
/// Returns +inf when y is outside U or x is outside dom f.  Each generator
/// uses its expanded closed form, which avoids the cancellation of the
/// generic expression.
inline double distance(const LegendreFunction& F, const Point& x, const Point& y) {
  F.check_dimension(x);
  F.check_dimension(y);
  if (!in_interior(F, y) || !in_domain(F, x)) return kInf;
  switch (F.kind()) {
    case Kind::Energy: return 0.5 * (x - y).squaredNorm();
    case Kind::Quadratic: {
      const Point d = x - y;
      return 0.5 * d.dot(F.matrix() * d);
    }
    case Kind::NegEntropy: {
      double sum = 0.0;
      for (Eigen::Index j = 0; j < x.size(); ++j) {
        if (x[j] > 0.0) sum += x[j] * std::log(x[j] / y[j]);
        sum += y[j] - x[j];
      }
      return sum;
    }
    case Kind::NegLog: {
      double sum = 0.0;
      for (Eigen::Index j = 0; j < x.size(); ++j) {
        const double u = x[j] / y[j] - 1.0;
        sum += u - std::log1p(u);
      }
      return sum;
    }
  }
  return kInf;
}

inline void require_interior(const LegendreFunction& F, const Point& p, const char* what) {
  if (!in_interior(F, p)) throw DomainError(std::string(what) + " must lie in int dom f");
}

/// D(x,z) - D(y,z) - D(x,y) - <x - y, grad f(y) - grad f(z)>; zero in exact arithmetic.
inline double three_point_residual(const LegendreFunction& F, const Point& x, const Point& y,
                                   const Point& z) {
  require_interior(F, y, "three_point_residual: y");
  require_interior(F, z, "three_point_residual: z");
  if (!in_domain(F, x)) throw DomainError("three_point_residual: x must lie in dom f");
  return distance(F, x, z) - distance(F, y, z) - distance(F, x, y) -
         (x - y).dot(grad_f(F, y) - grad_f(F, z));
}

/// <x1 - x2, grad f(y1) - grad f(y2)> - [D(x2,y1) + D(x1,y2) - D(x1,y1) - D(x2,y2)].
inline double four_point_residual(const LegendreFunction& F, const Point& x1, const Point& x2,
                                  const Point& y1, const Point& y2) {
  require_interior(F, y1, "four_point_residual: y1");
  require_interior(F, y2, "four_point_residual: y2");
  if (!in_domain(F, x1) || !in_domain(F, x2))
    throw DomainError("four_point_residual: x1, x2 must lie in dom f");
  const double lhs = (x1 - x2).dot(grad_f(F, y1) - grad_f(F, y2));
  const double rhs = distance(F, x2, y1) + distance(F, x1, y2) - distance(F, x1, y1) -
                     distance(F, x2, y2);
  return lhs - rhs;
}

enum class Divergence { SqEuclidean, Mahalanobis, KL, ItakuraSaito };

/// The generator whose distance() is the named divergence.
inline LegendreFunction named_divergence(Divergence name, int dimension,
                                         const std::optional<Eigen::MatrixXd>& matrix = {}) {
  switch (name) {
    case Divergence::SqEuclidean: return LegendreFunction::energy(dimension);
    case Divergence::Mahalanobis: {
      if (!matrix) throw InvalidInput("Mahalanobis divergence needs a matrix");
      if (matrix->rows() != dimension) throw InvalidInput("Mahalanobis matrix has wrong size");
      return LegendreFunction::quadratic(*matrix);
    }
    case Divergence::KL: return LegendreFunction::neg_entropy(dimension);
    case Divergence::ItakuraSaito: return LegendreFunction::neg_log(dimension);
  }
  throw InvalidInput("unknown divergence");
}

}  // namespace bregcheb

#endif  // BREGCHEB_BREGMAN_HPP
