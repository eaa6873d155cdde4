#include "deformlab/linalg.hpp"
#include "deformlab/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace deformlab;

TEST(Commutator, IdentityCommutesWithEverything)
{
  std::mt19937 rng(7);
  std::normal_distribution<double> g;
  CMatrix b(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) b(i, j) = cplx(g(rng), g(rng));
  EXPECT_EQ(commutator(CMatrix::Identity(4, 4), b).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Commutator, TwoByTwoExpansion)
{
  RMatrix a(2, 2), b(2, 2), expected(2, 2);
  a << 1, 0, 0, 2;
  b << 0, 1, 0, 0;
  expected << 0, -1, 0, 0;
  EXPECT_EQ(commutator(a, b), expected);
}

TEST(Commutator, RejectsMismatchedDimensions)
{
  EXPECT_THROW(commutator(RMatrix::Identity(2, 2), RMatrix::Identity(3, 3)), std::invalid_argument);
  EXPECT_THROW(commutator(RMatrix(2, 3), RMatrix(2, 3)), std::invalid_argument);
}

TEST(HermitianEigen, AscendingWithDominantIndexTieBreak)
{
  // degenerate pair: basis vectors e2 and e0 share eigenvalue 1
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = -2.0;
  m(2, 2) = 1.0;
  const auto d = hermitian_eigen(m);
  EXPECT_DOUBLE_EQ(d.values[0], -2.0);
  EXPECT_DOUBLE_EQ(d.values[1], 1.0);
  EXPECT_DOUBLE_EQ(d.values[2], 1.0);
  Eigen::Index i1 = 0, i2 = 0;
  d.vectors.col(1).cwiseAbs().maxCoeff(&i1);
  d.vectors.col(2).cwiseAbs().maxCoeff(&i2);
  EXPECT_LT(i1, i2);
}

TEST(FourierDifferentiation, ExactOnResolvedModesAndAntisymmetric)
{
  const std::size_t m = 16;
  const RMatrix d = fourier_differentiation(m);
  EXPECT_EQ((d + d.transpose()).cwiseAbs().maxCoeff(), 0.0);
  RVector f(m), df(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    f[static_cast<Eigen::Index>(j)] = std::sin(3.0 * t) + std::cos(7.0 * t);
    df[static_cast<Eigen::Index>(j)] = 3.0 * std::cos(3.0 * t) - 7.0 * std::sin(7.0 * t);
  }
  EXPECT_LT((d * f - df).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(fourier_differentiation(15), std::invalid_argument);
}

TEST(CentralDifference, FourthOrderOnPolynomialInterior)
{
  // exact for quartics away from the truncated edge rows
  const std::size_t n = 40;
  const double h = 0.1;
  const RMatrix d = central_difference_4th(n, h);
  EXPECT_EQ((d + d.transpose()).cwiseAbs().maxCoeff(), 0.0);
  RVector f(n), df(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = h * static_cast<double>(j);
    f[static_cast<Eigen::Index>(j)] = x * x * x * x - 2.0 * x;
    df[static_cast<Eigen::Index>(j)] = 4.0 * x * x * x - 2.0;
  }
  const RVector err = d * f - df;
  EXPECT_LT(err.segment(2, n - 4).cwiseAbs().maxCoeff(), 1e-10);

  const CSparse s = central_difference_4th_sparse(n, h);
  EXPECT_LT((CMatrix(s) - d.cast<cplx>()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Quadrature, GaussLegendreIntegratesPolynomialsExactly)
{
  const quad::GaussLegendre rule(5);  // exact through degree 9
  const double v = rule.integrate([](double x) { return std::pow(x, 9) + std::pow(x, 8) + 1.0; }, -1.0, 1.0);
  EXPECT_NEAR(v, 2.0 / 9.0 + 2.0, 1e-14);
  const quad::GaussLegendre rule20(20);
  double wsum = 0.0;
  for (double w : rule20.weights()) wsum += w;
  EXPECT_NEAR(wsum, 2.0, 1e-14);
}

TEST(Quadrature, CompositeAndAdaptiveAgreeOnSmoothIntegrand)
{
  auto f = [](double x) { return std::exp(-x * x); };
  const double exact = std::sqrt(std::numbers::pi) * std::erf(3.0);
  EXPECT_NEAR(quad::composite(f, -3.0, 3.0, 8), exact, 1e-14);
  EXPECT_NEAR(quad::adaptive(f, -3.0, 3.0), exact, 1e-13);
  EXPECT_THROW(quad::composite(f, 0.0, 1.0, 0), std::invalid_argument);
}
