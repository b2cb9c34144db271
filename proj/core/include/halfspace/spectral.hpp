#pragma once

// Spectral-domain building blocks for a scalar field above an impedance
// ground at z = 0: k_z branch rules, the ground reflection coefficient and
// the straight deformed contour k_z = k0 (i xi + 1 - xi/T), 0 <= xi <= T.
//
// Time convention is exp(-i omega t); outgoing waves are exp(+i k0 R) and
// physical vertical wavenumbers satisfy Im(k_z) >= 0.

#include <complex>
#include <numbers>

namespace halfspace {

using cplx = std::complex<double>;

/// Homogeneous ground described by its normalized admittance beta = 1/eta.
/// beta is canonical; eta is derived (infinite when beta = 0).
class GroundModel {
 public:
  static GroundModel from_impedance(double wavelength, cplx eta);
  static GroundModel from_admittance(double wavelength, cplx beta);

  double wavelength() const noexcept { return wavelength_; }
  double k0() const noexcept { return k0_; }
  cplx beta() const noexcept { return beta_; }
  cplx eta() const noexcept { return eta_; }

  /// True when beta == 0, i.e. the reflection coefficient is identically 1.
  bool is_perfect_image() const noexcept { return beta_ == cplx{0.0, 0.0}; }

 private:
  GroundModel(double wavelength, cplx beta);

  double wavelength_;
  double k0_;
  cplx beta_;
  cplx eta_;
};

bool operator==(const GroundModel& a, const GroundModel& b) noexcept;

/// Deformed-path parameter T and the Prony sampling counts W (samples) and
/// Q (exponential terms).
struct ContourSpec {
  double T = 10.0;
  int W = 10;
  int Q = 5;

  /// Throws std::invalid_argument unless T > 0, Q >= 1 and W >= 2Q.
  void validate() const;

  /// Sample spacing in xi.
  double step() const noexcept { return T / W; }
};

/// k_z = sqrt(k0^2 - k^2) on the physical sheet: Im(k_z) >= 0, and
/// Re(k_z) >= 0 when Im(k_z) = 0.
cplx kz_from_k(cplx k, double k0);

/// k = sqrt(k0^2 - k_z^2) with Re(k) >= 0, Im(k) >= 0 on the imaginary axis.
cplx k_from_kz(cplx kz, double k0);

/// Point on the deformed contour. Requires 0 <= xi <= T.
cplx kz_on_path(double xi, double k0, double T);

/// Inverse of kz_on_path, extended to the whole complex plane.
cplx xi_from_kz(cplx kz, double k0, double T);

/// (k_z - k0 beta) / (k_z + k0 beta). Throws SingularityError at the pole
/// k_z = -k0 beta.
cplx reflection_coefficient(cplx kz, double k0, cplx beta);

/// Distance from the reflection-coefficient pole to the deformed contour,
/// in units of k0.
double pole_clearance(const GroundModel& ground, const ContourSpec& contour);

/// Throws std::invalid_argument if the pole lies within 1e-6 k0 of the
/// contour.
void require_pole_clear(const GroundModel& ground, const ContourSpec& contour);

}  // namespace halfspace
