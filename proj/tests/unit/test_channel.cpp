#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "halfspace/channel.hpp"
#include "halfspace/errors.hpp"
#include "oracles.hpp"

using namespace halfspace;
using halfspace::testing::edof_from_eigenvalues;
using halfspace::testing::random_matrix;
using halfspace::testing::random_unitary;

namespace {
constexpr double kLambda = 0.1;
const GroundModel kGround = GroundModel::from_impedance(kLambda, {0.3, -0.1});
const LinkGeometry kBaseLink(12.0, 10.0, 4.0, 1.0, 10.0);

constexpr double kPinnedSumRe = -1.0744867385876065;
constexpr double kPinnedSumIm = -0.41098572339549444;
constexpr double kPinnedNorm = 0.28272832542407966;
}  // namespace

TEST(Ula, Positions) {
  const UlaGeometry g{12.0, 3.0, 1.0, 0.5};
  const auto two = ula_positions(g, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_DOUBLE_EQ(two[0].y, -5.5);
  EXPECT_DOUBLE_EQ(two[1].y, 6.5);
  const auto three = ula_positions(UlaGeometry{12.0, 3.0, 0.0, 0.0}, 3);
  EXPECT_DOUBLE_EQ(three[0].y, -6.0);
  EXPECT_DOUBLE_EQ(three[1].y, 0.0);
  EXPECT_DOUBLE_EQ(three[2].y, 6.0);
  for (const auto& p : three) {
    EXPECT_EQ(p.x, 0.0);
    EXPECT_EQ(p.z, 3.0);
  }
  const auto one = ula_positions(g, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].x, 1.0);
  EXPECT_EQ(one[0].y, 0.5);
  EXPECT_EQ(one[0].z, 3.0);
  EXPECT_THROW(ula_positions(g, 0), std::invalid_argument);
}

TEST(Link, Geometry) {
  EXPECT_EQ(kBaseLink.source().center_x, 0.0);
  EXPECT_EQ(kBaseLink.receiver().center_x, 10.0);
  EXPECT_EQ(kBaseLink.source().height, 10.0);
  EXPECT_EQ(kBaseLink.receiver().length, 4.0);
  EXPECT_THROW(LinkGeometry(12.0, 10.0, 4.0, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(LinkGeometry(12.0, -1.0, 4.0, 1.0, 5.0), std::invalid_argument);
  EXPECT_THROW(LinkGeometry(-12.0, 1.0, 4.0, 1.0, 5.0), std::invalid_argument);
}

TEST(ChannelMatrix, SingleEntry) {
  const auto green = GreensEvaluator::free_space(kGround);
  const auto H = build_channel_matrix(kBaseLink, 1, 1, green);
  ASSERT_EQ(H.rows(), 1);
  ASSERT_EQ(H.cols(), 1);
  EXPECT_EQ(H(0, 0), green({10.0, 0.0, 1.0}, {0.0, 0.0, 10.0}));
}

TEST(ChannelMatrix, FreeSpaceModulus) {
  const auto green = GreensEvaluator::free_space(kGround);
  const int N = 7, M = 5;
  const auto H = build_channel_matrix(kBaseLink, N, M, green);
  ASSERT_EQ(H.rows(), M);
  ASSERT_EQ(H.cols(), N);
  const auto rx = ula_positions(kBaseLink.receiver(), M);
  const auto tx = ula_positions(kBaseLink.source(), N);
  for (int m = 0; m < M; ++m) {
    for (int n = 0; n < N; ++n) {
      EXPECT_NEAR(std::abs(H(m, n)), 1.0 / (4.0 * std::numbers::pi * distance(rx[m], tx[n])), 1e-15);
    }
  }
}

TEST(ChannelMatrix, ReferenceScenarioRegression) {
  const auto green = GreensEvaluator::half_space(kGround, fit_image_expansion(kGround, {}));
  const auto H = build_channel_matrix(kBaseLink, 50, 50, green);
  ASSERT_TRUE(H.allFinite());
  const cplx sum = H.sum();
  EXPECT_NEAR(sum.real(), kPinnedSumRe, 1e-9);
  EXPECT_NEAR(sum.imag(), kPinnedSumIm, 1e-9);
  EXPECT_NEAR(H.norm(), kPinnedNorm, 1e-9);
}

TEST(Edof, TrivialCases) {
  EXPECT_DOUBLE_EQ(edof_discrete(Eigen::MatrixXcd::Identity(4, 4)), 4.0);
  Eigen::VectorXcd u(3), v(5);
  u << cplx(1, 2), cplx(-0.5, 0), cplx(0, 3);
  v << cplx(2, 0), cplx(0, -1), cplx(1, 1), cplx(0.3, 0), cplx(-2, 0.5);
  EXPECT_NEAR(edof_discrete(u * v.adjoint()), 1.0, 1e-14);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = std::sqrt(2.0);
  EXPECT_DOUBLE_EQ(edof_discrete(d), 1.0);
}

TEST(Edof, DegenerateChannel) {
  EXPECT_THROW(edof_discrete(Eigen::MatrixXcd::Zero(3, 4)), DegenerateChannelError);
}

TEST(Edof, BoundsAndEigenvalueOracle) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 20; ++trial) {
    const int M = 1 + trial % 20, N = 20 - trial % 7;
    const auto H = random_matrix(M, N, rng);
    const double xi = edof_discrete(H);
    EXPECT_GE(xi, 1.0 - 1e-12);
    EXPECT_LE(xi, std::min(M, N) + 1e-12);
    EXPECT_NEAR(xi, edof_from_eigenvalues(H), 1e-9);
  }
}

TEST(Edof, ScaleInvariance) {
  std::mt19937_64 rng(3);
  const auto H = random_matrix(12, 9, rng);
  const double base = edof_discrete(H);
  for (cplx c : {cplx(1e-6, 0.0), cplx(-3.0, 4.0), cplx(0.0, 1e5)}) {
    EXPECT_NEAR(edof_discrete(c * H), base, 1e-12 * base);
  }
}

TEST(Edof, UnitaryInvariance) {
  std::mt19937_64 rng(5);
  const auto H = random_matrix(10, 14, rng);
  const double base = edof_discrete(H);
  EXPECT_NEAR(edof_discrete(random_unitary(10, rng) * H), base, 1e-10);
  EXPECT_NEAR(edof_discrete(H * random_unitary(14, rng)), base, 1e-10);
}

TEST(Edof, PhysicalScenarioRespectsBounds) {
  const auto green = GreensEvaluator::free_space(kGround);
  const auto H = build_channel_matrix(kBaseLink, 40, 30, green);
  const double xi = edof_discrete(H);
  EXPECT_GE(xi, 1.0);
  EXPECT_LE(xi, 30.0);
  EXPECT_NEAR(xi, edof_from_eigenvalues(H), 1e-9 * xi);
}
