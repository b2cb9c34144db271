#include "halfspace/prony.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "halfspace/errors.hpp"

namespace halfspace {

namespace {

constexpr double kRepeatedRootTolerance = 1e-8;
constexpr double kZeroRootTolerance = 1e-14;
constexpr int kEigenMaxIterations = 500;
constexpr double kCancellationLimit = 1e6;

bool all_zero(const std::vector<cplx>& v) {
  return std::all_of(v.begin(), v.end(), [](cplx x) { return x == cplx{0.0, 0.0}; });
}

bool all_equal(const std::vector<cplx>& v) {
  const double scale = std::abs(v.front());
  return std::all_of(v.begin(), v.end(),
                     [&](cplx x) { return std::abs(x - v.front()) <= 1e-14 * scale; });
}

// Roots of x^Q + c[Q-1] x^(Q-1) + ... + c[0].
Eigen::VectorXcd characteristic_roots(const Eigen::VectorXcd& c) {
  const Eigen::Index q = c.size();
  if (q == 1) return Eigen::VectorXcd::Constant(1, -c(0));
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(q, q);
  companion.diagonal(-1).setOnes();
  companion.col(q - 1) = -c;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver;
  solver.setMaxIterations(kEigenMaxIterations);
  solver.compute(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw FitError("companion-matrix eigenvalue iteration did not converge");
  }
  return solver.eigenvalues();
}

}  // namespace

ReflectionSamples sample_reflection(const GroundModel& ground, const ContourSpec& contour) {
  contour.validate();
  require_pole_clear(ground, contour);
  ReflectionSamples s{contour, std::vector<cplx>(contour.W)};
  const double k0 = ground.k0();
  for (int w = 1; w <= contour.W; ++w) {
    // Exact endpoint at w = W.
    const double xi = (w == contour.W) ? contour.T : s.xi(w);
    s.values[w - 1] = reflection_coefficient(kz_on_path(xi, k0, contour.T), k0, ground.beta()) - 1.0;
  }
  return s;
}

ExponentialFit::ExponentialFit(std::vector<cplx> amplitudes, std::vector<cplx> exponents,
                               const ReflectionSamples& samples)
    : amplitudes_(std::move(amplitudes)),
      exponents_(std::move(exponents)),
      contour_(samples.contour) {
  if (amplitudes_.size() != exponents_.size()) {
    throw std::invalid_argument("amplitude and exponent counts differ");
  }
  for (int w = 1; w <= static_cast<int>(samples.values.size()); ++w) {
    residual_ = std::max(residual_, std::abs((*this)(samples.xi(w)) - samples.values[w - 1]));
  }
}

cplx ExponentialFit::operator()(cplx xi) const {
  cplx sum{0.0, 0.0};
  for (std::size_t n = 0; n < amplitudes_.size(); ++n) sum += amplitudes_[n] * std::exp(exponents_[n] * xi);
  return sum;
}

ExponentialFit fit_exponentials(const ReflectionSamples& samples, int Q) {
  const int W = static_cast<int>(samples.values.size());
  if (Q < 1) throw std::invalid_argument("Q must be >= 1");
  if (W != samples.contour.W) throw std::invalid_argument("sample count does not match contour W");
  if (W < 2 * Q) throw std::invalid_argument("Prony fit needs W >= 2Q");
  for (cplx v : samples.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("non-finite reflection sample");
    }
  }

  const auto zeros = std::vector<cplx>(Q, cplx{0.0, 0.0});
  if (all_zero(samples.values)) return ExponentialFit(zeros, zeros, samples);
  if (all_equal(samples.values)) {
    auto amps = zeros;
    amps[0] = samples.values.front();
    return ExponentialFit(std::move(amps), zeros, samples);
  }

  const auto& F = samples.values;  // F(w) = F[w-1]
  const int rows = W - Q;
  Eigen::MatrixXcd shifted(rows, Q);
  Eigen::VectorXcd rhs(rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < Q; ++c) shifted(r, c) = F[r + c];
    rhs(r) = -F[r + Q];
  }
  // Minimum-norm least squares, i.e. the pseudo-inverse solution.
  const Eigen::VectorXcd coeffs = shifted.completeOrthogonalDecomposition().solve(rhs);
  const Eigen::VectorXcd roots = characteristic_roots(coeffs);

  for (int i = 0; i < Q; ++i) {
    if (std::abs(roots(i)) <= kZeroRootTolerance) {
      throw FitError("characteristic root at zero: degenerate exponent");
    }
    for (int j = i + 1; j < Q; ++j) {
      if (std::abs(roots(i) - roots(j)) < kRepeatedRootTolerance) {
        throw FitError("repeated characteristic roots: ill-conditioned exponential fit");
      }
    }
  }

  const double spacing = samples.contour.step();
  std::vector<cplx> exponents(Q);
  bool ambiguous = false;
  for (int n = 0; n < Q; ++n) {
    exponents[n] = std::log(roots(n)) / spacing;
    if (std::abs(std::arg(roots(n))) > std::numbers::pi * (1.0 - 1e-9)) ambiguous = true;
  }

  Eigen::MatrixXcd vandermonde(W, Q);
  for (int n = 0; n < Q; ++n) {
    cplx power = roots(n);
    for (int w = 0; w < W; ++w) {
      vandermonde(w, n) = power;
      power *= roots(n);
    }
  }
  Eigen::VectorXcd values(W);
  for (int w = 0; w < W; ++w) values(w) = F[w];
  const Eigen::VectorXcd amps = vandermonde.completeOrthogonalDecomposition().solve(values);
  // Near-double roots pass the separation test but leave cancelling amplitudes.
  if (amps.cwiseAbs().sum() > kCancellationLimit * values.cwiseAbs().maxCoeff()) {
    throw FitError("nearly repeated characteristic roots: amplitudes cancel");
  }

  ExponentialFit fit(std::vector<cplx>(amps.data(), amps.data() + Q), std::move(exponents), samples);
  if (ambiguous) fit.mark_branch_ambiguous();
  return fit;
}

ImageExpansion ImageExpansion::zero(const GroundModel& ground, int Q) {
  return ImageExpansion{std::vector<cplx>(Q), std::vector<cplx>(Q), ground.k0(), ground};
}

ImageExpansion to_image_coefficients(const ExponentialFit& fit, const GroundModel& ground) {
  const double T = fit.contour().T;
  const double k0 = ground.k0();
  const cplx factor = T / cplx{1.0, -T};
  ImageExpansion out = ImageExpansion::zero(ground, fit.order());
  for (int n = 0; n < fit.order(); ++n) {
    const cplx B = fit.exponents()[n];
    out.a[n] = fit.amplitudes()[n] * std::exp(B * factor);
    out.b[n] = B * factor / k0;
  }
  return out;
}

ImageExpansion fit_image_expansion(const GroundModel& ground, const ContourSpec& contour) {
  const auto samples = sample_reflection(ground, contour);
  return to_image_coefficients(fit_exponentials(samples, contour.Q), ground);
}

cplx evaluate_expansion(const ImageExpansion& expansion, cplx kz) {
  cplx sum{0.0, 0.0};
  for (int n = 0; n < expansion.order(); ++n) sum += expansion.a[n] * std::exp(-expansion.b[n] * kz);
  return sum;
}

cplx evaluate_expansion(const ExponentialFit& fit, cplx kz, double k0) {
  return fit(xi_from_kz(kz, k0, fit.contour().T));
}

}  // namespace halfspace
