#pragma once

#include <vector>

#include <Eigen/Core>

#include "halfspace/greens.hpp"

namespace halfspace {

/// Straight aperture along the y axis at height `height`, centered at
/// (center_x, center_y).
struct UlaGeometry {
  double length = 0.0;
  double height = 0.0;
  double center_x = 0.0;
  double center_y = 0.0;

  Point3 at(double y_offset) const noexcept { return {center_x, center_y + y_offset, height}; }
};

/// Two parallel apertures: the source centered at x = 0, the receiver at
/// x = rho, both centered on y = 0.
class LinkGeometry {
 public:
  LinkGeometry(double source_length, double source_height, double receiver_length,
               double receiver_height, double rho);

  const UlaGeometry& source() const noexcept { return source_; }
  const UlaGeometry& receiver() const noexcept { return receiver_; }
  double rho() const noexcept { return rho_; }

 private:
  UlaGeometry source_;
  UlaGeometry receiver_;
  double rho_;
};

/// count = 1 gives the center; otherwise `count` equally spaced points
/// including both ends.
std::vector<Point3> ula_positions(const UlaGeometry& geom, int count);

using ChannelMatrix = Eigen::MatrixXcd;

/// H(m, n) = G(receiver m, source n); M rows, N columns.
ChannelMatrix build_channel_matrix(const LinkGeometry& link, int N, int M,
                                   const GreenFunction& green);

/// (tr R / ||R||_F)^2 with R = H^H H, evaluated without an eigensolver.
/// Throws DegenerateChannelError when H == 0.
double edof_discrete(const ChannelMatrix& H);

}  // namespace halfspace
