#pragma once

#include <vector>

#include "halfspace/channel.hpp"
#include "halfspace/quadrature.hpp"

namespace halfspace {

/// Gauss-Legendre rule mapped onto an aperture.
class LineQuadrature {
 public:
  explicit LineQuadrature(int order = 64);

  int order() const noexcept { return rule_.size(); }

  struct Nodes {
    std::vector<Point3> points;
    std::vector<double> weights;  ///< sum to the aperture length
  };

  Nodes on(const UlaGeometry& aperture) const;

 private:
  GaussLegendreRule rule_;
};

/// K(r_s, r_s2) = int_R conj(G(r_r, r_s)) G(r_r, r_s2) dr_r over `receiver`.
cplx kernel_K(const Point3& r_s, const Point3& r_s2, const UlaGeometry& receiver,
              const GreenFunction& green, const LineQuadrature& quad);

/// Continuous-aperture EDoF
///   (int_S int_R |G|^2)^2 / int_S int_S |K|^2
/// with one Green table of order x order evaluations.
double edof_continuous(const LinkGeometry& link, const GreenFunction& green,
                       const LineQuadrature& quad = LineQuadrature{});

struct ContinuousEdof {
  double value = 0.0;          ///< at the requested order
  double refined = 0.0;        ///< at twice the order
  double relative_change = 0.0;
};

/// Evaluates at `quad.order()` and `2 * quad.order()`. Throws AccuracyError
/// (estimate = refined value) when they differ by more than `rel_tol`.
ContinuousEdof edof_continuous_checked(const LinkGeometry& link, const GreenFunction& green,
                                       const LineQuadrature& quad = LineQuadrature{},
                                       double rel_tol = 1e-3);

}  // namespace halfspace
