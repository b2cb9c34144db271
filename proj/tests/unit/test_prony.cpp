#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "halfspace/errors.hpp"
#include "halfspace/prony.hpp"

using namespace halfspace;

namespace {
constexpr double kLambda = 0.1;
const GroundModel kGround = GroundModel::from_impedance(kLambda, {0.3, -0.1});

ReflectionSamples synthetic(const ContourSpec& contour, const std::vector<cplx>& A,
                            const std::vector<cplx>& B) {
  ReflectionSamples s{contour, std::vector<cplx>(contour.W)};
  for (int w = 1; w <= contour.W; ++w) {
    for (std::size_t n = 0; n < A.size(); ++n) s.values[w - 1] += A[n] * std::exp(B[n] * s.xi(w));
  }
  return s;
}

// Max |fit - (C - 1)| at 3W + 1 equally spaced points on [lo, T].
double off_grid_error(const ExponentialFit& fit, const GroundModel& ground, double lo) {
  const auto& c = fit.contour();
  const int n = 3 * c.W;
  double worst = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double xi = lo + (c.T - lo) * j / n;
    const cplx kz = kz_on_path(xi, ground.k0(), c.T);
    const cplx exact = reflection_coefficient(kz, ground.k0(), ground.beta()) - 1.0;
    worst = std::max(worst, std::abs(fit(xi) - exact));
  }
  return worst;
}
}  // namespace

TEST(Samples, PerfectImageIsZero) {
  const auto s = sample_reflection(GroundModel::from_admittance(kLambda, 0.0), ContourSpec{});
  ASSERT_EQ(s.values.size(), 10u);
  for (cplx v : s.values) EXPECT_EQ(v, cplx(0.0, 0.0));
}

TEST(Samples, ReferenceConfigurationBounded) {
  const auto s = sample_reflection(kGround, ContourSpec{});
  ASSERT_EQ(s.values.size(), 10u);
  for (cplx v : s.values) {
    EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
    EXPECT_LE(std::abs(v), 2.0);
  }
  EXPECT_DOUBLE_EQ(s.xi(1), 1.0);
  EXPECT_DOUBLE_EQ(s.xi(10), 10.0);
}

TEST(Samples, RejectsUndersampledContour) {
  EXPECT_THROW(sample_reflection(kGround, ContourSpec{10.0, 8, 5}), std::invalid_argument);
}

TEST(Fit, SingleExponentialRoundTrip) {
  const cplx A{1.5, 0.0}, B{-0.2, 0.1};
  const auto s = synthetic(ContourSpec{10.0, 10, 1}, {A}, {B});
  const auto fit = fit_exponentials(s, 1);
  ASSERT_EQ(fit.order(), 1);
  EXPECT_LE(std::abs(fit.amplitudes()[0] - A), 1e-10);
  EXPECT_LE(std::abs(fit.exponents()[0] - B), 1e-10);
  EXPECT_LE(fit.residual(), 1e-12);
  EXPECT_FALSE(fit.branch_ambiguous());
}

TEST(Fit, MultiExponentialRoundTrip) {
  const std::vector<cplx> A{{0.7, -0.2}, {-0.4, 0.1}, {0.05, 0.3}};
  const std::vector<cplx> B{{-0.1, 0.4}, {-0.6, -0.3}, {-1.2, 1.1}};
  const auto s = synthetic(ContourSpec{10.0, 12, 3}, A, B);
  const auto fit = fit_exponentials(s, 3);
  for (std::size_t n = 0; n < A.size(); ++n) {
    // Roots come back in solver order; match each true term to its nearest exponent.
    const auto& E = fit.exponents();
    const auto it = std::min_element(E.begin(), E.end(), [&](cplx x, cplx y) {
      return std::abs(x - B[n]) < std::abs(y - B[n]);
    });
    const auto k = static_cast<std::size_t>(it - E.begin());
    EXPECT_LE(std::abs(E[k] - B[n]), 1e-9) << n;
    EXPECT_LE(std::abs(fit.amplitudes()[k] - A[n]), 1e-9) << n;
  }
}

TEST(Fit, ZeroSamples) {
  ReflectionSamples s{ContourSpec{}, std::vector<cplx>(10)};
  const auto fit = fit_exponentials(s, 5);
  ASSERT_EQ(fit.order(), 5);
  for (int n = 0; n < 5; ++n) EXPECT_EQ(fit.amplitudes()[n], cplx(0.0, 0.0));
  EXPECT_EQ(fit.residual(), 0.0);
}

TEST(Fit, ConstantSamples) {
  ReflectionSamples s{ContourSpec{}, std::vector<cplx>(10, cplx(0.25, -0.5))};
  const auto fit = fit_exponentials(s, 5);
  EXPECT_EQ(fit.amplitudes()[0], cplx(0.25, -0.5));
  EXPECT_EQ(fit.exponents()[0], cplx(0.0, 0.0));
  EXPECT_EQ(fit.residual(), 0.0);
}

TEST(Fit, ReferenceConfigurationResidual) {
  const auto s = sample_reflection(kGround, ContourSpec{});
  const auto fit = fit_exponentials(s, 5);
  EXPECT_EQ(fit.order(), 5);
  EXPECT_LE(fit.residual(), 1e-3);
}

TEST(Fit, ResidualMonotoneInOrder) {
  double previous = std::numeric_limits<double>::infinity();
  for (int Q : {1, 2, 3, 4, 5}) {
    const auto s = sample_reflection(kGround, ContourSpec{10.0, 10, Q});
    const double r = fit_exponentials(s, Q).residual();
    EXPECT_LE(r, previous * (1.0 + 1e-9) + 1e-14) << "Q=" << Q;
    previous = r;
  }
}

TEST(Fit, OffGridWithinTenTimesResidual) {
  // With W = 2Q the fit interpolates and the on-grid residual is at round-off level,
  // so this property is exercised on an overdetermined fit.
  const ContourSpec contour{10.0, 10, 3};
  const auto fit = fit_exponentials(sample_reflection(kGround, contour), 3);
  EXPECT_LE(off_grid_error(fit, kGround, contour.step()), 10.0 * fit.residual());
}

TEST(Fit, ReferenceConfigurationOffGrid) {
  const auto fit = fit_exponentials(sample_reflection(kGround, ContourSpec{}), 5);
  EXPECT_LE(off_grid_error(fit, kGround, 0.0), 1e-3);
}

TEST(Fit, RejectsUnderdeterminedSystem) {
  ReflectionSamples s{ContourSpec{10.0, 10, 5}, std::vector<cplx>(10, 1.0)};
  EXPECT_THROW(fit_exponentials(s, 6), std::invalid_argument);
  EXPECT_THROW(fit_exponentials(s, 0), std::invalid_argument);
}

TEST(Fit, RejectsNonFiniteSamples) {
  ReflectionSamples s{ContourSpec{}, std::vector<cplx>(10, 1.0)};
  s.values[3] = {std::numeric_limits<double>::quiet_NaN(), 0.0};
  EXPECT_THROW(fit_exponentials(s, 5), std::invalid_argument);
}

TEST(Fit, RedundantOrderIsHarmless) {
  // One exponential fitted with two terms: the spare term gets no weight.
  const cplx B{-0.3, 0.2};
  const auto s = synthetic(ContourSpec{10.0, 10, 2}, {{1.0, 0.0}}, {B});
  const auto fit = fit_exponentials(s, 2);
  EXPECT_LE(fit.residual(), 1e-12);
  const int k = std::abs(fit.exponents()[0] - B) < std::abs(fit.exponents()[1] - B) ? 0 : 1;
  EXPECT_LE(std::abs(fit.amplitudes()[k] - 1.0), 1e-10);
  EXPECT_LE(std::abs(fit.amplitudes()[1 - k]), 1e-10);
}

TEST(Fit, DoubleRootIsAnError) {
  ReflectionSamples s{ContourSpec{10.0, 10, 2}, std::vector<cplx>(10)};
  const cplx B{-0.3, 0.2};
  for (int w = 1; w <= 10; ++w) s.values[w - 1] = (1.0 + s.xi(w)) * std::exp(B * s.xi(w));
  EXPECT_THROW(fit_exponentials(s, 2), FitError);
}

TEST(Fit, RootAtZeroIsAnError) {
  // F(1) != 0 followed by zeros: x^2 annihilates the tail.
  ReflectionSamples s{ContourSpec{10.0, 10, 2}, std::vector<cplx>(10)};
  s.values[0] = 1.0;
  EXPECT_THROW(fit_exponentials(s, 2), FitError);
}

TEST(Fit, BranchAmbiguityFlagged) {
  // Root exp(i pi): alternating samples.
  const auto s = synthetic(ContourSpec{10.0, 10, 1}, {{1.0, 0.0}}, {{-0.1, std::numbers::pi}});
  const auto fit = fit_exponentials(s, 1);
  EXPECT_TRUE(fit.branch_ambiguous());
  EXPECT_LE(fit.residual(), 1e-10);
}

TEST(Images, TrivialTransforms) {
  ReflectionSamples s{ContourSpec{}, std::vector<cplx>(10)};
  const ExponentialFit fit({cplx(0.4, 0.1), 0.0}, {0.0, cplx(-0.3, 2.0)}, s);
  const auto e = to_image_coefficients(fit, kGround);
  EXPECT_EQ(e.a[0], cplx(0.4, 0.1));
  EXPECT_EQ(e.b[0], cplx(0.0, 0.0));
  EXPECT_EQ(e.a[1], cplx(0.0, 0.0));
  EXPECT_DOUBLE_EQ(e.k0, kGround.k0());
}

TEST(Images, ZeroExpansion) {
  const auto e = ImageExpansion::zero(kGround, 4);
  EXPECT_EQ(e.order(), 4);
  for (cplx kz : {cplx(1.0, 0.0), cplx(0.0, 50.0), cplx(-3.0, 2.0)}) {
    EXPECT_EQ(evaluate_expansion(e, kz), cplx(0.0, 0.0));
  }
}

TEST(Images, RecombinationMatchesFitOnContour) {
  const ContourSpec contour;
  const auto samples = sample_reflection(kGround, contour);
  const auto fit = fit_exponentials(samples, contour.Q);
  const auto e = to_image_coefficients(fit, kGround);
  ASSERT_EQ(e.order(), 5);
  const double k0 = kGround.k0();
  for (int w = 1; w <= contour.W; ++w) {
    const cplx kz = kz_on_path(samples.xi(w), k0, contour.T);
    EXPECT_LE(std::abs(evaluate_expansion(e, kz) - samples.values[w - 1]), fit.residual() + 1e-10) << w;
    EXPECT_LE(std::abs(evaluate_expansion(fit, kz, k0) - samples.values[w - 1]), fit.residual() + 1e-12);
  }
}

TEST(Images, FitImageExpansionPipeline) {
  const auto e = fit_image_expansion(kGround, ContourSpec{});
  EXPECT_EQ(e.order(), 5);
  EXPECT_EQ(e.ground, kGround);
  const auto p = fit_image_expansion(GroundModel::from_admittance(kLambda, 0.0), ContourSpec{});
  for (int n = 0; n < p.order(); ++n) EXPECT_EQ(p.a[n], cplx(0.0, 0.0));
}
