#ifndef BREGCHEB_LEGENDRE_HPP
#define BREGCHEB_LEGENDRE_HPP

// Calculus of the four Legendre generators: value, gradient, conjugate,
// conjugate gradient, Hessian, and domain membership.
//
//   Energy      f(x) = 1/2 |x|^2                  U = R^J
//   Quadratic   f(x) = 1/2 <x, A x>, A SPD        U = R^J
//   NegEntropy  f(x) = sum x_j ln x_j - x_j       dom f = R^J_+, U = R^J_++
//   NegLog      f(x) = -sum ln x_j                dom f = U = R^J_++
//
// Values outside dom f are +inf; errors are reserved for malformed input.

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include "bregcheb/errors.hpp"
#include "bregcheb/tolerances.hpp"

namespace bregcheb {

using Point = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Kind { Energy, Quadratic, NegEntropy, NegLog };

inline std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Energy: return "energy";
    case Kind::Quadratic: return "quad";
    case Kind::NegEntropy: return "negentropy";
    case Kind::NegLog: return "neglog";
  }
  return "?";
}

inline Kind kind_from_string(std::string_view name) {
  if (name == "energy") return Kind::Energy;
  if (name == "quad" || name == "quadratic") return Kind::Quadratic;
  if (name == "negentropy") return Kind::NegEntropy;
  if (name == "neglog") return Kind::NegLog;
  throw InvalidInput("unknown generator '" + std::string(name) + "'");
}

class LegendreFunction {
 public:
  static LegendreFunction energy(int dimension) { return {Kind::Energy, dimension}; }
  static LegendreFunction neg_entropy(int dimension) { return {Kind::NegEntropy, dimension}; }
  static LegendreFunction neg_log(int dimension) { return {Kind::NegLog, dimension}; }

  static LegendreFunction quadratic(const Eigen::MatrixXd& matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() < 1)
      throw InvalidInput("quadratic matrix must be square and nonempty");
    if (!matrix.allFinite()) throw InvalidInput("quadratic matrix has non-finite entries");
    const double scale = matrix.cwiseAbs().maxCoeff();
    const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
    if (asym > kTolerances.symmetry_rel * scale)
      throw InvalidInput("quadratic matrix is not symmetric");
    LegendreFunction F(Kind::Quadratic, static_cast<int>(matrix.rows()));
    auto quad = std::make_shared<QuadData>();
    quad->matrix = 0.5 * (matrix + matrix.transpose());
    quad->llt.compute(quad->matrix);
    if (quad->llt.info() != Eigen::Success)
      throw InvalidInput("quadratic matrix is not positive definite");
    F.quad_ = std::move(quad);
    return F;
  }

  /// Generic constructor for the three matrix-free kinds.
  static LegendreFunction make(Kind kind, int dimension) {
    if (kind == Kind::Quadratic) return quadratic(Eigen::MatrixXd::Identity(dimension, dimension));
    return {kind, dimension};
  }

  Kind kind() const noexcept { return kind_; }
  int dimension() const noexcept { return dimension_; }
  bool has_matrix() const noexcept { return quad_ != nullptr; }

  const Eigen::MatrixXd& matrix() const {
    if (!quad_) throw InvalidInput("generator has no matrix");
    return quad_->matrix;
  }
  const Eigen::LLT<Eigen::MatrixXd>& factorization() const { return quad_->llt; }

  /// True when y -> D(x, y) is convex on U for every x.  False only for the
  /// Itakura-Saito generator.
  bool second_arg_convex() const noexcept { return kind_ != Kind::NegLog; }

  void check_dimension(const Point& x) const {
    if (x.size() != dimension_)
      throw InvalidInput("dimension mismatch: expected " + std::to_string(dimension_) +
                         ", got " + std::to_string(x.size()));
  }

 private:
  struct QuadData {
    Eigen::MatrixXd matrix;
    Eigen::LLT<Eigen::MatrixXd> llt;
  };

  LegendreFunction(Kind kind, int dimension) : kind_(kind), dimension_(dimension) {
    if (dimension < 1) throw InvalidInput("dimension must be >= 1");
  }

  Kind kind_;
  int dimension_;
  std::shared_ptr<const QuadData> quad_;
};

inline bool in_domain(const LegendreFunction& F, const Point& x) {
  F.check_dimension(x);
  switch (F.kind()) {
    case Kind::Energy:
    case Kind::Quadratic: return true;
    case Kind::NegEntropy: return (x.array() >= 0.0).all();
    case Kind::NegLog: return (x.array() > 0.0).all();
  }
  return false;
}

inline bool in_interior(const LegendreFunction& F, const Point& x) {
  F.check_dimension(x);
  switch (F.kind()) {
    case Kind::Energy:
    case Kind::Quadratic: return true;
    case Kind::NegEntropy:
    case Kind::NegLog: return (x.array() > 0.0).all();
  }
  return false;
}

/// Membership in int dom f*, the range of grad f.
inline bool in_conjugate_interior(const LegendreFunction& F, const Point& x_star) {
  F.check_dimension(x_star);
  if (F.kind() == Kind::NegLog) return (x_star.array() < 0.0).all();
  return x_star.allFinite();
}

inline double eval_f(const LegendreFunction& F, const Point& x) {
  F.check_dimension(x);
  switch (F.kind()) {
    case Kind::Energy: return 0.5 * x.squaredNorm();
    case Kind::Quadratic: return 0.5 * x.dot(F.matrix() * x);
    case Kind::NegEntropy: {
      double sum = 0.0;
      for (double v : x) {
        if (v < 0.0) return kInf;
        if (v > 0.0) sum += v * std::log(v) - v;  // 0 ln 0 = 0
      }
      return sum;
    }
    case Kind::NegLog: {
      double sum = 0.0;
      for (double v : x) {
        if (!(v > 0.0)) return kInf;
        sum -= std::log(v);
      }
      return sum;
    }
  }
  return kInf;
}

inline Point grad_f(const LegendreFunction& F, const Point& x) {
  if (!in_interior(F, x)) throw DomainError("grad_f: point outside int dom f");
  switch (F.kind()) {
    case Kind::Energy: return x;
    case Kind::Quadratic: return F.matrix() * x;
    case Kind::NegEntropy: return x.array().log().matrix();
    case Kind::NegLog: return (-x.array().inverse()).matrix();
  }
  return x;
}

/// Hessian of f on U.
inline Eigen::MatrixXd hess_f(const LegendreFunction& F, const Point& x) {
  if (!in_interior(F, x)) throw DomainError("hess_f: point outside int dom f");
  const auto n = x.size();
  switch (F.kind()) {
    case Kind::Energy: return Eigen::MatrixXd::Identity(n, n);
    case Kind::Quadratic: return F.matrix();
    case Kind::NegEntropy: return x.array().inverse().matrix().asDiagonal();
    case Kind::NegLog: return x.array().square().inverse().matrix().asDiagonal();
  }
  return Eigen::MatrixXd::Identity(n, n);
}

inline double eval_f_star(const LegendreFunction& F, const Point& x_star) {
  F.check_dimension(x_star);
  switch (F.kind()) {
    case Kind::Energy: return 0.5 * x_star.squaredNorm();
    case Kind::Quadratic: return 0.5 * x_star.dot(F.factorization().solve(x_star));
    case Kind::NegEntropy: return x_star.array().exp().sum();
    case Kind::NegLog: {
      double sum = 0.0;
      for (double v : x_star) {
        if (!(v < 0.0)) return kInf;
        sum += -1.0 - std::log(-v);
      }
      return sum;
    }
  }
  return kInf;
}

/// Inverse of grad_f.
inline Point grad_f_star(const LegendreFunction& F, const Point& x_star) {
  if (!in_conjugate_interior(F, x_star))
    throw DomainError("grad_f_star: point outside int dom f*");
  switch (F.kind()) {
    case Kind::Energy: return x_star;
    case Kind::Quadratic: return F.factorization().solve(x_star);
    case Kind::NegEntropy: return x_star.array().exp().matrix();
    case Kind::NegLog: return (-x_star.array().inverse()).matrix();
  }
  return x_star;
}

}  // namespace bregcheb

#endif  // BREGCHEB_LEGENDRE_HPP
