#pragma once

#include <complex>

namespace halfspace {

/// Largest |z| accepted by j0().
inline constexpr double kJ0MaxArgument = 1.0e4;

/// |z| at which j0() switches from the power series to the Hankel
/// asymptotic expansion.
inline constexpr double kJ0SeriesRadius = 12.0;

/// Bessel function of the first kind, order zero, for complex argument.
///
/// Uses the ascending power series (compensated summation) for
/// |z| <= kJ0SeriesRadius and the Hankel asymptotic expansion, truncated at
/// its smallest term, beyond that. Throws UnsupportedDomainError for
/// |z| > kJ0MaxArgument or non-finite input.
std::complex<double> j0(std::complex<double> z);

/// Real-argument convenience overload.
double j0(double x);

namespace detail {
std::complex<double> j0_series(std::complex<double> z);
std::complex<double> j0_asymptotic(std::complex<double> z);
}  // namespace detail

}  // namespace halfspace
