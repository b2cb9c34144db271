#include "halfspace/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "halfspace/errors.hpp"

namespace halfspace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Im >= 0, then Re >= 0 on the real axis.
cplx upper_root(cplx s) {
  if (s.imag() < 0.0 || (s.imag() == 0.0 && s.real() < 0.0)) return -s;
  return s;
}

// Re >= 0, then Im >= 0 on the imaginary axis.
cplx right_root(cplx s) {
  if (s.real() < 0.0 || (s.real() == 0.0 && s.imag() < 0.0)) return -s;
  return s;
}

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx d = b - a;
  const double t = std::clamp(((p - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

}  // namespace

GroundModel::GroundModel(double wavelength, cplx beta)
    : wavelength_(wavelength), k0_(kTwoPi / wavelength), beta_(beta) {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
    throw std::invalid_argument("wavelength must be positive and finite");
  }
  if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
    throw std::invalid_argument("admittance must be finite");
  }
  if (beta.real() < 0.0) {
    throw std::invalid_argument("ground must be passive: Re(beta) >= 0");
  }
  eta_ = is_perfect_image() ? cplx{std::numeric_limits<double>::infinity(), 0.0} : 1.0 / beta;
}

GroundModel GroundModel::from_impedance(double wavelength, cplx eta) {
  if (eta == cplx{0.0, 0.0}) throw std::invalid_argument("impedance must be nonzero");
  if (eta.real() < 0.0) throw std::invalid_argument("ground must be passive: Re(eta) >= 0");
  GroundModel g(wavelength, 1.0 / eta);
  g.eta_ = eta;
  return g;
}

GroundModel GroundModel::from_admittance(double wavelength, cplx beta) {
  return GroundModel(wavelength, beta);
}

bool operator==(const GroundModel& a, const GroundModel& b) noexcept {
  return a.wavelength() == b.wavelength() && a.beta() == b.beta();
}

void ContourSpec::validate() const {
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("contour T must be positive");
  if (Q < 1) throw std::invalid_argument("contour Q must be >= 1");
  if (W < 2 * Q) {
    throw std::invalid_argument("contour needs W >= 2Q (W=" + std::to_string(W) +
                                ", Q=" + std::to_string(Q) + ")");
  }
}

cplx kz_from_k(cplx k, double k0) { return upper_root(std::sqrt(cplx{k0 * k0} - k * k)); }

cplx k_from_kz(cplx kz, double k0) { return right_root(std::sqrt(cplx{k0 * k0} - kz * kz)); }

cplx kz_on_path(double xi, double k0, double T) {
  if (!(xi >= 0.0 && xi <= T)) {
    throw std::invalid_argument("xi outside [0, T] on the deformed path");
  }
  return k0 * cplx{1.0 - xi / T, xi};
}

cplx xi_from_kz(cplx kz, double k0, double T) {
  // kz = k0 (1 + xi (i - 1/T))
  return (kz / k0 - 1.0) / cplx{-1.0 / T, 1.0};
}

cplx reflection_coefficient(cplx kz, double k0, cplx beta) {
  const cplx shift = k0 * beta;
  const cplx denom = kz + shift;
  const double scale = std::max(std::abs(kz), std::abs(shift));
  if (std::abs(denom) <= 1e-14 * scale || (scale == 0.0)) {
    throw SingularityError("reflection coefficient evaluated at its pole k_z = -k0 beta");
  }
  if (beta == cplx{0.0, 0.0}) return {1.0, 0.0};
  return (kz - shift) / denom;
}

double pole_clearance(const GroundModel& ground, const ContourSpec& contour) {
  const double k0 = ground.k0();
  const cplx pole = -k0 * ground.beta();
  return segment_distance(pole, kz_on_path(0.0, k0, contour.T),
                          kz_on_path(contour.T, k0, contour.T)) / k0;
}

void require_pole_clear(const GroundModel& ground, const ContourSpec& contour) {
  if (ground.is_perfect_image()) return;
  if (pole_clearance(ground, contour) < 1e-6) {
    throw std::invalid_argument("deformed contour passes within 1e-6 k0 of the reflection pole");
  }
}

}  // namespace halfspace
