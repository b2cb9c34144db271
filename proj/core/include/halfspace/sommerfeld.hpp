#pragma once

// Direct evaluation of Sommerfeld-type spectral integrals
//
//   S[w](rho, zeta) = int_0^inf J0(k rho) exp(i k_z zeta) (k / k_z) w(k_z) dk
//
// along the real k axis. The propagating range k in [0, k0] is mapped with
// k = k0 sin(theta), which removes the 1/k_z branch-point singularity and
// makes the oscillation rate uniform in theta. The evanescent range uses
// u = sqrt(k^2 - k0^2), k_z = i u, so (k / k_z) dk = -i du, and is summed
// panel by panel until a rigorous remainder bound drops below tolerance.

#include <complex>
#include <functional>

#include "halfspace/spectral.hpp"

namespace halfspace {

struct QuadratureSpec {
  int panel_nodes = 32;
  /// Minimum panel count on the propagating range; raised automatically so
  /// that no panel spans more than about one oscillation.
  int path_panels = 64;
  double tail_rel_tol = 1e-10;
  int max_tail_panels = 256;

  void validate() const;
};

/// Diagnostics of one spectral integral evaluation.
struct SpectralIntegral {
  cplx value;
  cplx propagating;
  cplx evanescent;
  int propagating_panels = 0;
  int tail_panels = 0;
  double tail_end = 0.0;        ///< u at which the tail was truncated
  double tail_panel_width = 0.0;
  double remainder_bound = 0.0;  ///< bound on |neglected tail|
};

/// Evaluates S[w]. `weight_bound` must bound |w(i u)| for u >= 0; it feeds the
/// tail truncation test. Throws AccuracyError when the tail does not converge
/// within quad.max_tail_panels.
SpectralIntegral spectral_integral(double rho, double zeta, double k0,
                                   const std::function<cplx(cplx)>& weight,
                                   double weight_bound, const QuadratureSpec& quad);

/// i * S[1], which equals exp(i k0 R)/R with R = sqrt(rho^2 + zeta^2).
cplx sommerfeld_identity_rhs(double rho, double zeta, double k0,
                             const QuadratureSpec& quad = {});

/// (i / 4 pi) * S[C - 1](rho, z_sum): the part of the half-space Green's
/// function beyond the direct wave and the quasi-static image.
cplx reflected_integral_oracle(double rho, double z_sum, const GroundModel& ground,
                               const QuadratureSpec& quad = {});

/// Same as reflected_integral_oracle but returns the diagnostics.
SpectralIntegral reflected_integral_report(double rho, double z_sum,
                                           const GroundModel& ground,
                                           const QuadratureSpec& quad = {});

}  // namespace halfspace
