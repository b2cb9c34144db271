#include "halfspace/bessel.hpp"

#include <cmath>
#include <numbers>

#include "halfspace/errors.hpp"

namespace halfspace {

namespace detail {

// sum_m (-z^2/4)^m / (m!)^2 with Neumaier compensation.
std::complex<double> j0_series(std::complex<double> z) {
  const std::complex<double> x = -0.25 * z * z;
  std::complex<double> term{1.0, 0.0};
  std::complex<double> sum{1.0, 0.0};
  std::complex<double> carry{0.0, 0.0};
  auto add = [](double& s, double& c, double t) {
    const double u = s + t;
    c += std::abs(s) >= std::abs(t) ? (s - u) + t : (t - u) + s;
    s = u;
  };
  for (int m = 1; m < 200; ++m) {
    term *= x / static_cast<double>(m * m);
    double sr = sum.real(), si = sum.imag(), cr = carry.real(), ci = carry.imag();
    add(sr, cr, term.real());
    add(si, ci, term.imag());
    sum = {sr, si};
    carry = {cr, ci};
    const double t = std::abs(term);
    if (m * m > std::abs(x) && (t <= 1e-17 * std::abs(sum + carry) || t < 1e-300)) break;
  }
  return sum + carry;
}

// Hankel expansion J0(z) = sqrt(2/(pi z)) (P cos chi - Q sin chi),
// chi = z - pi/4, valid for Re(z) >= 0 and large |z|. Terms
// c_k = prod_{j<=k} (-(2j-1)^2) / (k! (8z)^k); the series is truncated at its
// smallest term.
std::complex<double> j0_asymptotic(std::complex<double> z) {
  const std::complex<double> inv8z = 1.0 / (8.0 * z);
  std::complex<double> p{1.0, 0.0};
  std::complex<double> q{0.0, 0.0};
  std::complex<double> c{1.0, 0.0};
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const std::complex<double> next = c * (-odd * odd) * inv8z / static_cast<double>(k);
    const double size = std::abs(next);
    if (size >= last && k > 8) break;
    c = next;
    last = size;
    // k even: (-1)^(k/2) c_k into P; k odd: (-1)^((k-1)/2) c_k into Q.
    const int r = k % 4;
    if (r == 0) p += c;
    else if (r == 1) q += c;
    else if (r == 2) p -= c;
    else q -= c;
    if (size < 1e-17) break;
  }
  const std::complex<double> chi = z - 0.25 * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * z)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace detail

std::complex<double> j0(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw UnsupportedDomainError("j0: non-finite argument");
  }
  const double r = std::abs(z);
  if (r > kJ0MaxArgument) throw UnsupportedDomainError("j0: |z| exceeds supported range 1e4");
  if (r <= kJ0SeriesRadius) return detail::j0_series(z);
  // J0 is even; keep the expansion in the right half-plane.
  return detail::j0_asymptotic(z.real() < 0.0 ? -z : z);
}

double j0(double x) { return j0(std::complex<double>{x, 0.0}).real(); }

}  // namespace halfspace
