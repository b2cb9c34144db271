#include "halfspace/sommerfeld.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "halfspace/bessel.hpp"
#include "halfspace/errors.hpp"
#include "halfspace/quadrature.hpp"

namespace halfspace {

namespace {

constexpr double kPi = std::numbers::pi;

// Bound on |C(iu) - 1| = 2|beta| / |iu/k0 + beta| for u >= 0.
double reflection_tail_bound(cplx beta) {
  if (beta.imag() >= 0.0) return 2.0;
  if (beta.real() <= 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 * std::abs(beta) / beta.real();
}

}  // namespace

void QuadratureSpec::validate() const {
  if (panel_nodes < 4) throw std::invalid_argument("panel_nodes must be >= 4");
  if (path_panels < 1) throw std::invalid_argument("path_panels must be >= 1");
  if (!(tail_rel_tol > 0.0 && tail_rel_tol <= 1e-3)) {
    throw std::invalid_argument("tail_rel_tol must lie in (0, 1e-3]");
  }
  if (max_tail_panels < 1) throw std::invalid_argument("max_tail_panels must be >= 1");
}

SpectralIntegral spectral_integral(double rho, double zeta, double k0,
                                   const std::function<cplx(cplx)>& weight,
                                   double weight_bound, const QuadratureSpec& quad) {
  quad.validate();
  if (!(rho >= 0.0)) throw std::invalid_argument("rho must be >= 0");
  if (!(zeta > 0.0)) throw std::invalid_argument("zeta must be > 0 for the tail to decay");
  if (!(k0 > 0.0)) throw std::invalid_argument("k0 must be > 0");

  const GaussLegendreRule rule(quad.panel_nodes);
  SpectralIntegral out;

  // Propagating range, k = k0 sin(theta): (k / k_z) dk = k0 sin(theta) d theta.
  // The phase advances at most k0 * hypot(rho, zeta) per radian.
  const double reach = std::hypot(rho, zeta);
  out.propagating_panels =
      std::max(quad.path_panels, static_cast<int>(std::ceil(k0 * reach / kPi)));
  out.propagating = rule.integrate_panels(
      [&](double theta) {
        const double s = std::sin(theta);
        const double c = std::cos(theta);
        const cplx kz{k0 * c, 0.0};
        return j0(k0 * rho * s) * std::exp(cplx{0.0, k0 * c * zeta}) * weight(kz) * (k0 * s);
      },
      0.0, 0.5 * kPi, out.propagating_panels);

  // Evanescent range, k_z = i u: (k / k_z) dk = -i du.
  double width = std::min(k0, 4.0 / zeta);
  if (rho > 0.0) width = std::min(width, 8.0 * kPi / rho);
  out.tail_panel_width = width;

  auto tail_integrand = [&](double u) {
    return j0(rho * std::sqrt(k0 * k0 + u * u)) * std::exp(-u * zeta) * weight(cplx{0.0, u});
  };

  cplx tail{0.0, 0.0};
  if (weight_bound > 0.0) {
    bool converged = false;
    for (int p = 0; p < quad.max_tail_panels; ++p) {
      const cplx panel = rule.integrate(tail_integrand, p * width, (p + 1) * width);
      tail += panel;
      out.tail_panels = p + 1;
      out.tail_end = (p + 1) * width;
      // |J0| <= 1 on the real axis, so the rest is bounded by
      // weight_bound * exp(-U zeta) / zeta.
      out.remainder_bound = weight_bound * std::exp(-out.tail_end * zeta) / zeta;
      const double scale = std::abs(out.propagating + cplx{0.0, -1.0} * tail);
      if (std::abs(panel) <= quad.tail_rel_tol * scale &&
          out.remainder_bound <= quad.tail_rel_tol * scale) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      const cplx estimate = out.propagating + cplx{0.0, -1.0} * tail;
      throw AccuracyError("spectral tail did not converge within max_tail_panels", estimate,
                          out.remainder_bound / std::max(std::abs(estimate), 1e-300));
    }
  }
  out.evanescent = cplx{0.0, -1.0} * tail;
  out.value = out.propagating + out.evanescent;
  return out;
}

cplx sommerfeld_identity_rhs(double rho, double zeta, double k0, const QuadratureSpec& quad) {
  const auto r = spectral_integral(
      rho, zeta, k0, [](cplx) { return cplx{1.0, 0.0}; }, 1.0, quad);
  return cplx{0.0, 1.0} * r.value;
}

SpectralIntegral reflected_integral_report(double rho, double z_sum, const GroundModel& ground,
                                           const QuadratureSpec& quad) {
  if (!(z_sum > 0.0)) throw std::invalid_argument("z_r + z_s must be > 0");
  if (ground.is_perfect_image()) {
    quad.validate();
    return SpectralIntegral{};
  }
  const double k0 = ground.k0();
  const cplx beta = ground.beta();
  const cplx scale{0.0, 1.0 / (4.0 * kPi)};
  SpectralIntegral r;
  try {
    r = spectral_integral(
        rho, z_sum, k0,
        [&](cplx kz) { return reflection_coefficient(kz, k0, beta) - 1.0; },
        reflection_tail_bound(beta), quad);
  } catch (const AccuracyError& e) {
    throw AccuracyError(e.what(), e.estimate() * scale, e.achieved());
  }
  r.value *= scale;
  r.propagating *= scale;
  r.evanescent *= scale;
  r.remainder_bound *= std::abs(scale);
  return r;
}

cplx reflected_integral_oracle(double rho, double z_sum, const GroundModel& ground,
                               const QuadratureSpec& quad) {
  return reflected_integral_report(rho, z_sum, ground, quad).value;
}

}  // namespace halfspace
