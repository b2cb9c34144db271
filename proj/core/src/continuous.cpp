#include "halfspace/continuous.hpp"

#include <cmath>

#include <Eigen/Core>

#include "halfspace/errors.hpp"
#include "halfspace/parallel.hpp"

namespace halfspace {

LineQuadrature::LineQuadrature(int order) : rule_(order) {}

LineQuadrature::Nodes LineQuadrature::on(const UlaGeometry& aperture) const {
  Nodes out;
  const double half = 0.5 * aperture.length;
  const auto x = rule_.nodes();
  const auto w = rule_.weights();
  out.points.reserve(x.size());
  out.weights.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.points.push_back(aperture.at(half * x[i]));
    out.weights.push_back(half * w[i]);
  }
  return out;
}

cplx kernel_K(const Point3& r_s, const Point3& r_s2, const UlaGeometry& receiver,
              const GreenFunction& green, const LineQuadrature& quad) {
  const auto nodes = quad.on(receiver);
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < nodes.points.size(); ++i) {
    sum += nodes.weights[i] * std::conj(green(nodes.points[i], r_s)) * green(nodes.points[i], r_s2);
  }
  return sum;
}

double edof_continuous(const LinkGeometry& link, const GreenFunction& green,
                       const LineQuadrature& quad) {
  const auto rx = quad.on(link.receiver());
  const auto tx = quad.on(link.source());
  const Eigen::Index nr = static_cast<Eigen::Index>(rx.points.size());
  const Eigen::Index ns = static_cast<Eigen::Index>(tx.points.size());

  // Weighted Green table: row i = receiver node, column j = source node,
  // scaled by sqrt(receiver weight) so that K = Gw^H Gw.
  Eigen::MatrixXcd table(nr, ns);
  parallel_for(static_cast<std::size_t>(nr), [&](std::size_t i) {
    const double sw = std::sqrt(rx.weights[i]);
    for (Eigen::Index j = 0; j < ns; ++j) {
      table(static_cast<Eigen::Index>(i), j) = sw * green(rx.points[i], tx.points[j]);
    }
  });
  const Eigen::MatrixXcd kernel = table.adjoint() * table;

  double numerator = 0.0;
  double denominator = 0.0;
  for (Eigen::Index j = 0; j < ns; ++j) {
    numerator += tx.weights[j] * kernel(j, j).real();
    for (Eigen::Index l = 0; l < ns; ++l) {
      denominator += tx.weights[j] * tx.weights[l] * std::norm(kernel(j, l));
    }
  }
  if (!(denominator > 0.0)) throw DegenerateChannelError("continuous aperture field is identically zero");
  return numerator * numerator / denominator;
}

ContinuousEdof edof_continuous_checked(const LinkGeometry& link, const GreenFunction& green,
                                       const LineQuadrature& quad, double rel_tol) {
  ContinuousEdof out;
  out.value = edof_continuous(link, green, quad);
  out.refined = edof_continuous(link, green, LineQuadrature(2 * quad.order()));
  out.relative_change = std::abs(out.refined - out.value) / std::abs(out.refined);
  if (out.relative_change > rel_tol) {
    throw AccuracyError("continuous EDoF quadrature not converged under order doubling",
                        cplx{out.refined, 0.0}, out.relative_change);
  }
  return out;
}

}  // namespace halfspace
