#pragma once

#include <functional>
#include <optional>

#include "halfspace/prony.hpp"
#include "halfspace/sommerfeld.hpp"
#include "halfspace/spectral.hpp"

namespace halfspace {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Points closer than this are treated as coincident.
inline constexpr double kCoincidenceTolerance = 1e-9;

double distance(const Point3& a, const Point3& b) noexcept;
double horizontal_distance(const Point3& a, const Point3& b) noexcept;
Point3 mirror(const Point3& p) noexcept;

/// exp(i k0 D)/(4 pi D), D = |r_r - r_s|.
cplx g_free(const Point3& r_r, const Point3& r_s, double k0);

/// sqrt(rho^2 + (z_sum + i b)^2) with Re > 0 (Im >= 0 on a tie).
cplx complex_image_distance(double rho, double z_sum, cplx b);

/// Direct wave + quasi-static image + complex images.
cplx g_half_closed(const Point3& r_r, const Point3& r_s, const ImageExpansion& expansion);

/// Direct wave + quasi-static image + numerically integrated remainder.
cplx g_half_oracle(const Point3& r_r, const Point3& r_s, const GroundModel& ground,
                   const QuadratureSpec& quad = {});

enum class GreenMode { free_space, half_space_closed, half_space_oracle };

const char* to_string(GreenMode mode) noexcept;

/// Any G(r_r, r_s); GreensEvaluator converts to this.
using GreenFunction = std::function<cplx(const Point3&, const Point3&)>;

/// Immutable Green's function selector. Safe to share between threads.
class GreensEvaluator {
 public:
  static GreensEvaluator free_space(const GroundModel& ground);
  static GreensEvaluator half_space(const GroundModel& ground, ImageExpansion expansion);
  static GreensEvaluator half_space_oracle(const GroundModel& ground, QuadratureSpec quad = {});

  GreenMode mode() const noexcept { return mode_; }
  const GroundModel& ground() const noexcept { return ground_; }
  const std::optional<ImageExpansion>& expansion() const noexcept { return expansion_; }

  cplx operator()(const Point3& r_r, const Point3& r_s) const;

 private:
  GreensEvaluator(GreenMode mode, const GroundModel& ground) : mode_(mode), ground_(ground) {}

  GreenMode mode_;
  GroundModel ground_;
  std::optional<ImageExpansion> expansion_;
  QuadratureSpec quad_;
};

}  // namespace halfspace
