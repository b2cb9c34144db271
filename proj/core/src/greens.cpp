#include "halfspace/greens.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "halfspace/errors.hpp"

namespace halfspace {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

cplx spherical_wave(cplx distance, double k0) {
  return std::exp(cplx{0.0, k0} * distance) / (kFourPi * distance);
}

void require_above_ground(const Point3& r_r, const Point3& r_s) {
  if (r_r.z < 0.0 || r_s.z < 0.0) {
    throw std::invalid_argument("half-space Green's function needs z >= 0 for both points");
  }
}

void require_distinct(const Point3& r_r, const Point3& r_s) {
  if (distance(r_r, r_s) < kCoincidenceTolerance) {
    throw SingularityError("Green's function evaluated at coincident points");
  }
}

}  // namespace

double distance(const Point3& a, const Point3& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

double horizontal_distance(const Point3& a, const Point3& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Point3 mirror(const Point3& p) noexcept { return {p.x, p.y, -p.z}; }

cplx g_free(const Point3& r_r, const Point3& r_s, double k0) {
  require_distinct(r_r, r_s);
  return spherical_wave(distance(r_r, r_s), k0);
}

cplx complex_image_distance(double rho, double z_sum, cplx b) {
  const cplx height = z_sum + cplx{0.0, 1.0} * b;
  const cplx squared = rho * rho + height * height;
  if (std::abs(squared) == 0.0) throw SingularityError("zero complex image distance");
  cplx r = std::sqrt(squared);
  if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
  return r;
}

cplx g_half_closed(const Point3& r_r, const Point3& r_s, const ImageExpansion& expansion) {
  require_above_ground(r_r, r_s);
  require_distinct(r_r, r_s);
  const double k0 = expansion.k0;
  const Point3 image = mirror(r_s);
  const double d2 = distance(r_r, image);
  if (d2 < kCoincidenceTolerance) throw SingularityError("receiver coincides with the source image");

  const double rho = horizontal_distance(r_r, r_s);
  const double z_sum = r_r.z + r_s.z;
  cplx g = spherical_wave(distance(r_r, r_s), k0) + spherical_wave(d2, k0);
  for (int n = 0; n < expansion.order(); ++n) {
    if (expansion.a[n] == cplx{0.0, 0.0}) continue;
    g += expansion.a[n] * spherical_wave(complex_image_distance(rho, z_sum, expansion.b[n]), k0);
  }
  return g;
}

cplx g_half_oracle(const Point3& r_r, const Point3& r_s, const GroundModel& ground,
                   const QuadratureSpec& quad) {
  require_above_ground(r_r, r_s);
  require_distinct(r_r, r_s);
  const double z_sum = r_r.z + r_s.z;
  if (!(z_sum > 0.0)) throw std::invalid_argument("oracle needs z_r + z_s > 0");
  const double k0 = ground.k0();
  return spherical_wave(distance(r_r, r_s), k0) + spherical_wave(distance(r_r, mirror(r_s)), k0) +
         reflected_integral_oracle(horizontal_distance(r_r, r_s), z_sum, ground, quad);
}

const char* to_string(GreenMode mode) noexcept {
  switch (mode) {
    case GreenMode::free_space: return "free_space";
    case GreenMode::half_space_closed: return "half_space_closed";
    case GreenMode::half_space_oracle: return "half_space_oracle";
  }
  return "unknown";
}

GreensEvaluator GreensEvaluator::free_space(const GroundModel& ground) {
  return GreensEvaluator(GreenMode::free_space, ground);
}

GreensEvaluator GreensEvaluator::half_space(const GroundModel& ground, ImageExpansion expansion) {
  if (expansion.k0 != ground.k0()) {
    throw std::invalid_argument("image expansion was fitted for a different wavenumber");
  }
  GreensEvaluator e(GreenMode::half_space_closed, ground);
  e.expansion_ = std::move(expansion);
  return e;
}

GreensEvaluator GreensEvaluator::half_space_oracle(const GroundModel& ground, QuadratureSpec quad) {
  quad.validate();
  GreensEvaluator e(GreenMode::half_space_oracle, ground);
  e.quad_ = quad;
  return e;
}

cplx GreensEvaluator::operator()(const Point3& r_r, const Point3& r_s) const {
  switch (mode_) {
    case GreenMode::free_space: return g_free(r_r, r_s, ground_.k0());
    case GreenMode::half_space_closed: return g_half_closed(r_r, r_s, *expansion_);
    case GreenMode::half_space_oracle: return g_half_oracle(r_r, r_s, ground_, quad_);
  }
  throw std::logic_error("unknown Green mode");
}

}  // namespace halfspace
