#include "halfspace/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "halfspace/errors.hpp"
#include "halfspace/parallel.hpp"

namespace halfspace {

LinkGeometry::LinkGeometry(double source_length, double source_height, double receiver_length,
                           double receiver_height, double rho)
    : source_{source_length, source_height, 0.0, 0.0},
      receiver_{receiver_length, receiver_height, rho, 0.0},
      rho_(rho) {
  if (source_length < 0.0 || receiver_length < 0.0) throw std::invalid_argument("aperture length < 0");
  if (source_height < 0.0 || receiver_height < 0.0) throw std::invalid_argument("aperture height < 0");
  if (!(rho > 0.0)) throw std::invalid_argument("horizontal separation rho must be > 0");
}

std::vector<Point3> ula_positions(const UlaGeometry& geom, int count) {
  if (count < 1) throw std::invalid_argument("antenna count must be >= 1");
  if (count == 1) return {geom.at(0.0)};
  std::vector<Point3> out;
  out.reserve(count);
  const double spacing = geom.length / (count - 1);
  for (int i = 0; i < count; ++i) out.push_back(geom.at(-0.5 * geom.length + i * spacing));
  return out;
}

ChannelMatrix build_channel_matrix(const LinkGeometry& link, int N, int M,
                                   const GreenFunction& green) {
  const auto sources = ula_positions(link.source(), N);
  const auto receivers = ula_positions(link.receiver(), M);
  ChannelMatrix H(M, N);
  // One task per receiver row.
  parallel_for(static_cast<std::size_t>(M), [&](std::size_t m) {
    for (int n = 0; n < N; ++n) H(static_cast<Eigen::Index>(m), n) = green(receivers[m], sources[n]);
  });
  return H;
}

double edof_discrete(const ChannelMatrix& H) {
  const double trace = H.squaredNorm();  // tr(H^H H)
  if (!(trace > 0.0)) throw DegenerateChannelError("channel matrix is identically zero");
  // ||H^H H||_F = ||H H^H||_F; form the smaller Gram matrix.
  const double frob = H.cols() <= H.rows() ? (H.adjoint() * H).norm() : (H * H.adjoint()).norm();
  const double ratio = trace / frob;
  return ratio * ratio;
}

}  // namespace halfspace
