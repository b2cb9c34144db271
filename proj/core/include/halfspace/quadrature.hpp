#pragma once

#include <span>
#include <vector>

namespace halfspace {

/// Gauss-Legendre rule on the reference interval [-1, 1].
class GaussLegendreRule {
 public:
  /// Nodes are computed by Newton iteration on P_n; n >= 1.
  explicit GaussLegendreRule(int n);

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Integrates f over [a, b] with a single panel.
  template <typename F>
  auto integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    decltype(f(mid)) sum{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      sum += weights_[i] * f(mid + half * nodes_[i]);
    }
    return sum * half;
  }

  /// Composite rule: `panels` equal panels over [a, b].
  template <typename F>
  auto integrate_panels(F&& f, double a, double b, int panels) const {
    const double h = (b - a) / panels;
    decltype(f(a)) sum{};
    for (int p = 0; p < panels; ++p) {
      sum += integrate(f, a + p * h, a + (p + 1) * h);
    }
    return sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace halfspace
