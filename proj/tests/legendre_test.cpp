#include <gtest/gtest.h>

#include <random>

#include "bregcheb/legendre.hpp"
#include "bregcheb/sampling.hpp"
#include "test_support.hpp"

using namespace bregcheb;

namespace {

const auto E2 = LegendreFunction::energy(2);
const auto H2 = LegendreFunction::neg_entropy(2);
const auto L2 = LegendreFunction::neg_log(2);

TEST(Legendre, EvalExamples) {
  EXPECT_DOUBLE_EQ(eval_f(E2, Point{{3.0, 4.0}}), 12.5);
  EXPECT_EQ(eval_f(H2, Point{{0.0, 0.0}}), 0.0);
  EXPECT_EQ(eval_f(L2, Point{{1.0, -1.0}}), kInf);
  EXPECT_EQ(eval_f(H2, Point{{-1e-300, 1.0}}), kInf);
}

TEST(Legendre, GradientExamples) {
  EXPECT_EQ(grad_f(E2, Point{{2.0, 5.0}}), (Point{{2.0, 5.0}}));
  EXPECT_EQ(grad_f(H2, Point{{1.0, 1.0}}), (Point{{0.0, 0.0}}));
  EXPECT_EQ(grad_f(L2, Point{{2.0, 4.0}}), (Point{{-0.5, -0.25}}));
  EXPECT_THROW(grad_f(H2, Point{{0.0, 1.0}}), DomainError);
  EXPECT_THROW(grad_f(L2, Point{{-1.0, 1.0}}), DomainError);
}

TEST(Legendre, ConjugateGradientExamples) {
  const Point p = grad_f_star(H2, Point{{0.0, std::log(4.0)}});
  EXPECT_DOUBLE_EQ(p[0], 1.0);
  EXPECT_DOUBLE_EQ(p[1], 4.0);
  EXPECT_EQ(grad_f_star(E2, Point{{7.0, -3.0}}), (Point{{7.0, -3.0}}));
  EXPECT_EQ(grad_f_star(L2, Point{{-0.5, -0.25}}), (Point{{2.0, 4.0}}));
  EXPECT_THROW(grad_f_star(L2, Point{{0.0, -1.0}}), DomainError);
}

TEST(Legendre, ConjugateValueExamples) {
  EXPECT_DOUBLE_EQ(eval_f_star(H2, Point{{0.0, 0.0}}), 2.0);
  EXPECT_DOUBLE_EQ(eval_f_star(E2, Point{{3.0, 4.0}}), 12.5);
  EXPECT_DOUBLE_EQ(eval_f_star(L2, Point{{-1.0, -1.0}}), -2.0);
  EXPECT_EQ(eval_f_star(L2, Point{{1.0, -1.0}}), kInf);
}

TEST(Legendre, DomainMembership) {
  EXPECT_TRUE(in_domain(H2, Point{{0.0, 1.0}}));
  EXPECT_FALSE(in_interior(H2, Point{{0.0, 1.0}}));
  EXPECT_TRUE(in_domain(E2, Point{{-5.0, 1e9}}));
  EXPECT_TRUE(in_interior(E2, Point{{-5.0, 1e9}}));
  EXPECT_FALSE(in_domain(L2, Point{{0.0, 1.0}}));
  EXPECT_FALSE(in_interior(L2, Point{{0.0, 1.0}}));
}

TEST(Legendre, DimensionMismatchIsAnError) {
  EXPECT_THROW(eval_f(E2, Point{{1.0, 2.0, 3.0}}), InvalidInput);
  EXPECT_THROW(eval_f_star(H2, Point{{1.0}}), InvalidInput);
  EXPECT_THROW(LegendreFunction::energy(0), InvalidInput);
}

TEST(Legendre, QuadraticValidation) {
  Eigen::MatrixXd asym(2, 2);
  asym << 2, 1, 0, 2;
  EXPECT_THROW(LegendreFunction::quadratic(asym), InvalidInput);
  Eigen::MatrixXd indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  EXPECT_THROW(LegendreFunction::quadratic(indefinite), InvalidInput);
  Eigen::MatrixXd A(2, 2);
  A << 2, 0.5, 0.5, 1;
  const auto Q = LegendreFunction::quadratic(A);
  const Point x{{1.0, -2.0}};
  EXPECT_DOUBLE_EQ(eval_f(Q, x), 0.5 * x.dot(A * x));
  EXPECT_LT((grad_f_star(Q, grad_f(Q, x)) - x).norm(), 1e-14);
}

class LegendreProperties : public ::testing::TestWithParam<int> {};

TEST_P(LegendreProperties, RoundTripFenchelYoungAndGradient) {
  std::mt19937_64 rng(1000 + GetParam());
  const int J = GetParam();
  for (const auto& F : sampling::all_generators(J, rng)) {
    SCOPED_TRACE(std::string(to_string(F.kind())));
    for (int i = 0; i < 1000; ++i) {
      const Point x = sampling::interior_point(F, rng);
      const Point g = grad_f(F, x);
      EXPECT_LE((grad_f_star(F, g) - x).norm(), 1e-9);
      EXPECT_LE(std::abs(eval_f(F, x) + eval_f_star(F, g) - x.dot(g)), 1e-9);
    }
    for (int i = 0; i < 50; ++i) {
      const Point x = sampling::interior_point(F, rng);
      const Point fd = oracle::central_gradient([&](const Point& p) { return eval_f(F, p); }, x, 1e-6);
      EXPECT_LE((fd - grad_f(F, x)).norm(), 1e-5 * std::max(1.0, grad_f(F, x).norm()));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, LegendreProperties, ::testing::Values(1, 2, 4));

TEST(Legendre, EssentialSmoothnessNearBoundary) {
  for (const auto& F : {H2, L2}) {
    double prev = 0.0;
    for (double d = 1e-1; d >= 1e-8; d *= 0.1) {
      const double n = grad_f(F, Point{{d, 1.0}}).norm();
      EXPECT_GT(n, prev);
      prev = n;
    }
    EXPECT_GT(prev, 15.0);
  }
}

TEST(Legendre, HessianMatchesGradientDifferences) {
  std::mt19937_64 rng(7);
  for (const auto& F : sampling::all_generators(3, rng)) {
    const Point x = sampling::interior_point(F, rng);
    const Eigen::MatrixXd H = hess_f(F, x);
    for (int j = 0; j < 3; ++j) {
      Point p = x, m = x;
      p[j] += 1e-6;
      m[j] -= 1e-6;
      const Point col = (grad_f(F, p) - grad_f(F, m)) / 2e-6;
      EXPECT_LE((col - H.col(j)).norm(), 1e-5 * std::max(1.0, H.norm()));
    }
  }
}

}  // namespace
